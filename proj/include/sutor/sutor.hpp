#pragma once

#include "sutor/integer.hpp"
#include "sutor/error.hpp"
#include "sutor/words.hpp"
#include "sutor/abelian.hpp"
#include "sutor/group_ring.hpp"
#include "sutor/fox.hpp"
#include "sutor/engine.hpp"
#include "sutor/polytope.hpp"
#include "sutor/families.hpp"
#include "sutor/io.hpp"
