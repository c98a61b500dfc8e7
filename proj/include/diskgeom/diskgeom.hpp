#ifndef DISKGEOM_DISKGEOM_HPP
#define DISKGEOM_DISKGEOM_HPP

#include "diskgeom/core.hpp"
#include "diskgeom/euclid.hpp"
#include "diskgeom/hyperbolic.hpp"
#include "diskgeom/spherical.hpp"
#include "diskgeom/configurations.hpp"

#endif  // DISKGEOM_DISKGEOM_HPP
