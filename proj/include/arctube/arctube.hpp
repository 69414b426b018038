#pragma once

#include "arctube/interior_arc.hpp"
#include "arctube/notation.hpp"
#include "arctube/quiver.hpp"
#include "arctube/serialize.hpp"
#include "arctube/surface.hpp"
#include "arctube/triangulation.hpp"
#include "arctube/tubes.hpp"
