#pragma once

// Everything at once.

#include "categorder.hpp"
#include "document.hpp"
#include "dot.hpp"
#include "emalg.hpp"
#include "fixtures.hpp"
#include "functorder.hpp"
#include "generate.hpp"
#include "monad.hpp"
#include "ordcore.hpp"
#include "pmv.hpp"
#include "power.hpp"
#include "rel1.hpp"
#include "report.hpp"
#include "suite.hpp"
#include "util.hpp"
#include "view.hpp"
