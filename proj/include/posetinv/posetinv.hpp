#pragma once

#include "catalog.hpp"
#include "embedding.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "hom.hpp"
#include "closed_forms.hpp"
#include "invariant_vector.hpp"
#include "invariants.hpp"
#include "json_io.hpp"
#include "kan.hpp"
#include "matrix.hpp"
#include "module.hpp"
#include "parallel.hpp"
#include "poset.hpp"
#include "random.hpp"
#include "relexact.hpp"
#include "signed.hpp"
#include "sparse.hpp"
#include "suite.hpp"
#include "templates.hpp"
