#pragma once

#include "hyperell/curve.hpp"
#include "hyperell/errors.hpp"
#include "hyperell/expr.hpp"
#include "hyperell/matrix.hpp"
#include "hyperell/parser.hpp"
#include "hyperell/poly.hpp"
#include "hyperell/rational.hpp"
#include "hyperell/relations.hpp"
#include "hyperell/rewriter.hpp"
#include "hyperell/serialize.hpp"
#include "hyperell/symbol.hpp"
#include "hyperell/variety.hpp"
#include "hyperell/xiseries.hpp"
