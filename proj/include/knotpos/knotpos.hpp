#pragma once

#include "knotpos/laurent.hpp"
#include "knotpos/diagram.hpp"
#include "knotpos/gauss.hpp"
#include "knotpos/vassiliev.hpp"
#include "knotpos/polynomials.hpp"
#include "knotpos/matrix.hpp"
#include "knotpos/surfaces.hpp"
#include "knotpos/moves.hpp"
#include "knotpos/positivity.hpp"
#include "knotpos/table.hpp"
#include "knotpos/report.hpp"
