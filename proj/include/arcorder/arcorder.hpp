#pragma once

#include "arcorder/checkers.hpp"
#include "arcorder/construction.hpp"
#include "arcorder/core.hpp"
#include "arcorder/generators.hpp"
#include "arcorder/io.hpp"
#include "arcorder/recognizer.hpp"
#include "arcorder/svg.hpp"
