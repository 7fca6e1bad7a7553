#include <gtest/gtest.h>

#include "symbez/json.hpp"
#include "symbez/parse.hpp"

using namespace symbez;
using nlohmann::json;

TEST(Json, ReportSchema) {
  const auto r = solve_p2(parse_poly("X+Y+Z", 3), parse_poly("X^5+Y^5+Z^5", 3));
  const json j = to_json(r);
  for (const char* key : {"space", "degrees", "bezout", "transverse", "obstruction", "orbit_type", "real_count", "points"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["space"], "P2");
  EXPECT_EQ(j["degrees"], json({1, 5}));
  EXPECT_EQ(j["bezout"], 5);
  EXPECT_EQ(j["transverse"], true);
  EXPECT_TRUE(j["obstruction"].is_null());
  EXPECT_EQ(j["orbit_type"], "[S3/C3] + [S3/C2]");
  EXPECT_EQ(j["real_count"], 3);
  ASSERT_EQ(j["points"].size(), 5u);
  for (const auto& p : j["points"]) {
    for (const char* key : {"coords", "exact", "stabilizer", "orbit_id", "multiplicity", "residual", "jacobian_score", "is_real"}) {
      EXPECT_TRUE(p.contains(key)) << key;
    }
    EXPECT_EQ(p["coords"].size(), 3u);
    EXPECT_EQ(p["coords"][0].size(), 2u);
  }
}

TEST(Json, ObstructionPresent) {
  const auto r = solve_p2(parse_poly("X+Y+Z", 3), parse_poly("X^4+Y^4+Z^4", 3));
  const json j = to_json(r);
  EXPECT_EQ(j["transverse"], false);
  ASSERT_TRUE(j["obstruction"].is_object());
  EXPECT_NE(j["obstruction"]["kind"], "none");
}

TEST(Json, RoundTripIsIdempotent) {
  const auto r = solve_p2(random_symmetric(3, 2, 9), random_symmetric(3, 4, 10));
  const std::string once = render(to_json(r));
  EXPECT_EQ(render(json::parse(once)), once);

  const auto run = verify_p2_table(1, 4, 3, 2);
  const std::string text = render(to_json(run));
  EXPECT_EQ(render(json::parse(text)), text);
  const json j = json::parse(text);
  EXPECT_EQ(j["theorem"], run.theorem);
  EXPECT_EQ(j["verdict"], "pass");
  EXPECT_EQ(j["params"]["degrees"], json({1, 4}));
  EXPECT_EQ(j["trials"].size(), run.trials.size());
}

TEST(Json, Deterministic) {
  const auto a = render(to_json(verify_p2_table(2, 3, 3, 99)));
  const auto b = render(to_json(verify_p2_table(2, 3, 3, 99)));
  EXPECT_EQ(a, b);
}
