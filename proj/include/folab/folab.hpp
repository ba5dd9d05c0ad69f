#pragma once

#include "folab/colored.hpp"
#include "folab/extended_real.hpp"
#include "folab/forest.hpp"
#include "folab/io.hpp"
#include "folab/iso.hpp"
#include "folab/operad.hpp"
#include "folab/random.hpp"
#include "folab/suites.hpp"
#include "folab/svg.hpp"
#include "folab/swiss_cheese.hpp"
#include "folab/trees_alpha.hpp"
#include "folab/w_construction.hpp"
#include "folab/weight.hpp"
