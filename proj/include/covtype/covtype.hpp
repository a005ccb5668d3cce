#pragma once

#include "covtype/bounds.hpp"
#include "covtype/complex.hpp"
#include "covtype/contractibility.hpp"
#include "covtype/cover.hpp"
#include "covtype/covering_map.hpp"
#include "covtype/error.hpp"
#include "covtype/field.hpp"
#include "covtype/gallery.hpp"
#include "covtype/homology.hpp"
#include "covtype/json_io.hpp"
#include "covtype/linalg.hpp"
#include "covtype/search.hpp"
#include "covtype/simplex.hpp"
