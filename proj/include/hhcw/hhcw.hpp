#pragma once

#include "hhcw/error.hpp"
#include "hhcw/rational.hpp"
#include "hhcw/rootsys.hpp"
#include "hhcw/weyl.hpp"
#include "hhcw/hermitian.hpp"
#include "hhcw/unitarity.hpp"
#include "hhcw/schubert.hpp"
#include "hhcw/report.hpp"
