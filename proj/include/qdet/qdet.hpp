#pragma once

#include "qdet/block.hpp"
#include "qdet/config.hpp"
#include "qdet/document.hpp"
#include "qdet/errors.hpp"
#include "qdet/inverse.hpp"
#include "qdet/matrix.hpp"
#include "qdet/quasidet.hpp"
#include "qdet/quaternion.hpp"
#include "qdet/rational.hpp"
#include "qdet/ring.hpp"
#include "qdet/solve.hpp"
