#pragma once

#include "orelab/config.hpp"
#include "orelab/construct.hpp"
#include "orelab/criteria.hpp"
#include "orelab/element_set.hpp"
#include "orelab/errors.hpp"
#include "orelab/ideals.hpp"
#include "orelab/isomorphism.hpp"
#include "orelab/ore.hpp"
#include "orelab/report.hpp"
#include "orelab/ring.hpp"
#include "orelab/theorems.hpp"
