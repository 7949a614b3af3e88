#pragma once

#include "natural.hpp"
#include "euclid.hpp"
#include "classify.hpp"
#include "proof_trace.hpp"
#include "commensurability.hpp"
#include "oracle.hpp"
#include "format.hpp"
