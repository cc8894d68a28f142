#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "properties.hpp"

using namespace kadv::test;

namespace {

void require(const PropertyResult& r) {
    INFO(r.name << ": worst " << r.worst << " (tolerance " << r.tolerance << ") " << r.detail);
    CHECK(r.passed);
}

} // namespace

TEST_CASE("constant fields are reproduced by every scheme") { require(constant_preservation()); }

TEST_CASE("kappa reductions match the expanded one-dimensional formulas") {
    require(reduction_identities());
}

TEST_CASE("si2d with W = 0 reduces to the one-dimensional scheme") {
    require(dimensional_reduction());
}

TEST_CASE("CTU rows collapse to si2d rows where C*D = 0") { require(ctu_degeneracy()); }

TEST_CASE("symbol coefficients equal assembled interior rows") {
    require(symbol_stencil_consistency());
}

TEST_CASE("amplification factor at zero wavenumber") { require(symbol_at_zero()); }

TEST_CASE("amplification modulus is even in theta") { require(conjugate_symmetry()); }
