#pragma once

#include "qtoda/cartan.hpp"
#include "qtoda/coxeter.hpp"
#include "qtoda/diffop.hpp"
#include "qtoda/hopf.hpp"
#include "qtoda/hseries.hpp"
#include "qtoda/json_io.hpp"
#include "qtoda/linalg.hpp"
#include "qtoda/ordering.hpp"
#include "qtoda/qscalar.hpp"
#include "qtoda/rational.hpp"
#include "qtoda/realization.hpp"
#include "qtoda/representation.hpp"
#include "qtoda/rewrite.hpp"
#include "qtoda/rmatrix.hpp"
#include "qtoda/root_vectors.hpp"
#include "qtoda/session.hpp"
#include "qtoda/toda.hpp"
#include "qtoda/zpoly.hpp"
