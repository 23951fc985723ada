#pragma once

#include "halg/core/error.hpp"
#include "halg/core/field.hpp"
#include "halg/core/matrix.hpp"
#include "halg/core/monomial.hpp"
#include "halg/core/polynomial.hpp"
#include "halg/core/ring.hpp"
#include "halg/core/vector.hpp"
#include "halg/groebner/groebner.hpp"
#include "halg/invariants/analysis.hpp"
#include "halg/invariants/homological.hpp"
#include "halg/invariants/invariants.hpp"
#include "halg/io/corpus.hpp"
#include "halg/io/report.hpp"
#include "halg/modcat/hilbert.hpp"
#include "halg/modcat/module.hpp"
#include "halg/oracle/oracle.hpp"
#include "halg/resolve/resolution.hpp"
#include "halg/verify/checks.hpp"
#include "halg/verify/runner.hpp"
