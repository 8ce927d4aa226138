#include <catch2/catch_amalgamated.hpp>

#include "cubix/json_io.hpp"

using namespace cubix;

TEST_CASE("wire format round-trips") {
  binary_cubic f{Int("123456789012345678901"), -2, 0, 7};
  CHECK(cubic_from_json(to_json(f)) == f);

  ternary_form A = ternary_form::from_coeffs(rat(1, 2), 3, rat(-5, 7), 0, 1, rat(2, 3));
  CHECK(ternary_from_json(to_json(A)) == A);

  CHECK(rat_from_json(to_json(rat(-45, 14))) == rat(-45, 14));
  CHECK(rat_from_json(json("3/-4")) == rat(-3, 4));
  CHECK_THROWS_AS(rat_from_json(json("1/0")), error);

  // payload shapes parse back into the originating values
  auto rep = density_oracle(3, 1, 1);
  json j = to_json(rep);
  CHECK(rat_from_json(j["maximal_density"]) == rep.maximal);
  CHECK(int_from_json(j["n_maximal"]) == rep.n_maximal);

  family_spec sp;
  sp.sign = -1;
  json a = to_json(avg_cl2_bound(sp));
  CHECK(rat_from_json(a["bound"]) == rat(45, 14));
  CHECK(a["bound_rendered"] == "3.214");
}
