#pragma once

// Umbrella header: exact two-parameter quasi-shuffle algebra over the
// rationals, with the associated NCSF / QSym / WQSym bases, transition
// machinery and verification suites.

#include <qshuf/combinat.hpp>
#include <qshuf/fgl.hpp>
#include <qshuf/gauss_int.hpp>
#include <qshuf/lincomb.hpp>
#include <qshuf/ncsf.hpp>
#include <qshuf/numeric.hpp>
#include <qshuf/param_coeff.hpp>
#include <qshuf/qsym.hpp>
#include <qshuf/serialize.hpp>
#include <qshuf/series.hpp>
#include <qshuf/shuffle.hpp>
#include <qshuf/stpoly.hpp>
#include <qshuf/tables.hpp>
#include <qshuf/verify.hpp>
#include <qshuf/wqsym.hpp>
