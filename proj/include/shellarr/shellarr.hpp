#pragma once

#include "shellarr/vertex_set.hpp"
#include "shellarr/simplicial_complex.hpp"
#include "shellarr/shelling.hpp"
#include "shellarr/families.hpp"
#include "shellarr/diagonal_subspace.hpp"
#include "shellarr/lattice.hpp"
#include "shellarr/upper_complex.hpp"
#include "shellarr/homology.hpp"
#include "shellarr/wedge.hpp"
#include "shellarr/matroid.hpp"
#include "shellarr/io.hpp"
