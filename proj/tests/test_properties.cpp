#include "qtoda/qtoda.hpp"

#include <catch2/catch_amalgamated.hpp>
