#pragma once

// Knot mosaics as executable objects: tile matrices with validation, strand
// tracing, planar diagram codes, Kauffman bracket / Jones polynomial,
// rational tangle constructors, constrained random generation, enumeration,
// and rendering.

#include "kmosaic/errors.hpp"
#include "kmosaic/generator.hpp"
#include "kmosaic/invariants.hpp"
#include "kmosaic/io.hpp"
#include "kmosaic/laurent.hpp"
#include "kmosaic/mosaic.hpp"
#include "kmosaic/oracle.hpp"
#include "kmosaic/pdcode.hpp"
#include "kmosaic/render.hpp"
#include "kmosaic/tangles.hpp"
#include "kmosaic/tiles.hpp"
#include "kmosaic/traversal.hpp"
