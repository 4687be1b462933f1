#pragma once

#include "canonical.hpp"
#include "construction.hpp"
#include "counting.hpp"
#include "error.hpp"
#include "exact.hpp"
#include "extremal.hpp"
#include "io.hpp"
#include "limits.hpp"
#include "parallel.hpp"
#include "report.hpp"
#include "tree.hpp"
#include "treegen.hpp"
#include "verify.hpp"
