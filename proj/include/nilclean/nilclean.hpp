#pragma once

#include "nilclean/catalog.hpp"
#include "nilclean/classifier.hpp"
#include "nilclean/cli.hpp"
#include "nilclean/decomposer.hpp"
#include "nilclean/elements.hpp"
#include "nilclean/expr.hpp"
#include "nilclean/io.hpp"
#include "nilclean/lifting.hpp"
#include "nilclean/ring.hpp"
