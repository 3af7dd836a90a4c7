#pragma once

#include "qclass/bicrossed.hpp"
#include "qclass/combinatorics.hpp"
#include "qclass/criteria.hpp"
#include "qclass/dual.hpp"
#include "qclass/error.hpp"
#include "qclass/fusion.hpp"
#include "qclass/rigorous.hpp"
#include "qclass/scalars.hpp"
#include "qclass/spectral.hpp"
#include "qclass/tri.hpp"
#include "qclass/acceptance.hpp"
