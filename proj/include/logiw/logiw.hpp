#pragma once

#include "error.hpp"
#include "integer.hpp"
#include "padic.hpp"
#include "localfields.hpp"
#include "polynomial.hpp"
#include "lambda.hpp"
#include "residue.hpp"
#include "growth.hpp"
#include "invariants.hpp"
#include "classgroups.hpp"
#include "tables.hpp"
