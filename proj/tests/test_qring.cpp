#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "skein/qring.hpp"
using namespace skein;
TEST_CASE("smoke") { CHECK(RingElem::alpha() * RingElem::beta() == RingElem::one()); }
