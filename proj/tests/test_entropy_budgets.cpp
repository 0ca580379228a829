// Copyright 2026 The Shadowguard Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "shadowguard/budgets.hpp"
#include "shadowguard/entropy.hpp"

using namespace shadowguard;
using Catch::Approx;

TEST_CASE("Page entropy closed forms", "[entropy]") {
    SECTION("asymptotic form, k=2 N=10") {
        REQUIRE(page_entropy_asymptotic(2, 10) ==
                Approx(2.0 * std::numbers::ln2 - std::pow(2.0, -7))
                    .epsilon(1e-15));
    }
    SECTION("k=1 approaches ln 2 for large N") {
        REQUIRE(page_entropy_asymptotic(1, 40) ==
                Approx(std::numbers::ln2).margin(1e-11));
    }
    SECTION("exact and asymptotic agree at (k=2, N=10)") {
        const double exact = page_entropy_exact(4, 1024);
        const double asym = page_entropy_asymptotic(2, 10);
        REQUIRE(std::abs(exact - asym) < 5e-3);
    }
    SECTION("domain checks") {
        REQUIRE_THROWS_AS(page_entropy_asymptotic(6, 10),
                          std::invalid_argument);
        REQUIRE_THROWS_AS(page_entropy_exact(3, 1024),
                          std::invalid_argument);
        REQUIRE_THROWS_AS(page_entropy_exact(64, 1024),
                          std::invalid_argument);
    }
}

TEST_CASE("Haar average purity", "[entropy]") {
    REQUIRE(haar_average_purity(2, 2) == Approx(0.8).epsilon(1e-15));
    REQUIRE(haar_average_purity(1, 16) == Approx(1.0).epsilon(1e-15));
    REQUIRE(haar_average_purity(4, 16) == Approx(20.0 / 65.0).epsilon(1e-15));
}

TEST_CASE("observable budget", "[budgets]") {
    SECTION("exact ceiling of the formula") {
        // 4^3 ln(400) / 0.01 = 38345.373...; the ceiling is 38346.
        REQUIRE(budget_observables_raw(2, 10, 0.1, 0.05) ==
                Approx(64.0 * std::log(400.0) / 0.01).epsilon(1e-15));
        REQUIRE(budget_observables(2, 10, 0.1, 0.05) == 38346);
    }
    SECTION("doubling L adds 4^{k+1} ln 2 / eps^2 to the raw value") {
        const double base = budget_observables_raw(2, 7, 0.1, 0.05);
        const double doubled = budget_observables_raw(2, 14, 0.1, 0.05);
        REQUIRE(doubled - base ==
                Approx(64.0 * std::numbers::ln2 / 0.01).epsilon(1e-12));
    }
    SECTION("domain validation") {
        REQUIRE_THROWS_AS(budget_observables(2, 1, 0.1, 2.0),
                          std::invalid_argument);
        REQUIRE_THROWS_AS(budget_observables(2, 0, 0.1, 0.1),
                          std::invalid_argument);
        REQUIRE_THROWS_AS(budget_observables(0, 1, 0.1, 0.1),
                          std::invalid_argument);
        REQUIRE_THROWS_AS(budget_observables(2, 1, 0.0, 0.1),
                          std::invalid_argument);
    }
}

TEST_CASE("purity budget", "[budgets]") {
    REQUIRE(budget_purity(2, 0.1, 0.1, 1.0) == 64000);
    REQUIRE(budget_purity(2, 0.1, 0.1, 0.25) == 16000);
    SECTION("doubling epsilon quarters the raw budget") {
        REQUIRE(budget_purity_raw(3, 0.2, 0.1, 1.0) ==
                Approx(budget_purity_raw(3, 0.1, 0.1, 1.0) / 4.0)
                    .epsilon(1e-12));
    }
    REQUIRE_THROWS_AS(budget_purity(2, 0.1, 0.1, 0.0),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(budget_purity(2, 0.1, 0.1, 1.5),
                      std::invalid_argument);
}

TEST_CASE("gradient budget", "[budgets]") {
    SECTION("raw form is L^2 times the observable budget") {
        REQUIRE(budget_gradient_raw(2, 10, 0.1, 0.05) ==
                Approx(100.0 * budget_observables_raw(2, 10, 0.1, 0.05))
                    .epsilon(1e-15));
        REQUIRE(budget_gradient(2, 10, 0.1, 0.05) == 3834538);
    }
    SECTION("L = 1 reduces to the observable budget") {
        REQUIRE(budget_gradient(3, 1, 0.05, 0.01) ==
                budget_observables(3, 1, 0.05, 0.01));
    }
}
