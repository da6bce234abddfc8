#pragma once

#include "hyperell/identities.hpp"
#include "hyperell/independence.hpp"
#include "hyperell/weierstrass.hpp"
