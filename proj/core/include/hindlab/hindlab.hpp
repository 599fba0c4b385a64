#pragma once

#include "hindlab/bohr.hpp"
#include "hindlab/constructions.hpp"
#include "hindlab/covers.hpp"
#include "hindlab/error.hpp"
#include "hindlab/families.hpp"
#include "hindlab/intset.hpp"
#include "hindlab/report.hpp"
#include "hindlab/setfile.hpp"
#include "hindlab/spacing.hpp"
#include "hindlab/suite.hpp"
