#pragma once

#include "schurlab/algebra.hpp"
#include "schurlab/autgroup.hpp"
#include "schurlab/characters.hpp"
#include "schurlab/constructions.hpp"
#include "schurlab/designs.hpp"
#include "schurlab/errors.hpp"
#include "schurlab/gauss_int.hpp"
#include "schurlab/group.hpp"
#include "schurlab/io.hpp"
#include "schurlab/scheme.hpp"
