#include <gtest/gtest.h>

#include "minlen/io/serialize.hpp"

using namespace minlen;

TEST(Format, FixedSignificantDigits) {
  EXPECT_EQ(io::format_double(1.0), "1.0000000000000000e+00");
  EXPECT_EQ(io::format_double(-0.1), "-1.0000000000000001e-01");
  EXPECT_EQ(io::format_double(std::nan("")), "nan");
  EXPECT_EQ(std::stod(io::format_double(0.1 + 0.2)), 0.1 + 0.2);
}

TEST(Dump, FloatsScalarsAndNonFinite) {
  io::json j;
  j["a"] = 0.5;
  j["b"] = 3;
  j["c"] = std::vector<double>{1.0, 2.0};
  j["d"] = std::numeric_limits<double>::infinity();
  j["e"] = "x";
  const std::string s = io::dump(j);
  EXPECT_NE(s.find("\"a\": 5.0000000000000000e-01"), std::string::npos) << s;
  EXPECT_NE(s.find("\"b\": 3"), std::string::npos);
  EXPECT_NE(s.find("[1.0000000000000000e+00, 2.0000000000000000e+00]"), std::string::npos) << s;
  EXPECT_NE(s.find("\"d\": null"), std::string::npos);
  EXPECT_EQ(io::json::parse(s)["a"].get<double>(), 0.5);
  EXPECT_EQ(s, io::dump(io::json::parse(s)));
}

TEST(Csv, Quoting) {
  EXPECT_EQ(io::csv_field("plain"), "plain");
  EXPECT_EQ(io::csv_field("a,b"), "\"a,b\"");
  EXPECT_EQ(io::csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
}

TEST(Csv, SpectrumHeaderAndRows) {
  const auto t = dirac::spectrum_table(dirac::DOParams(0.5, 0.1), 2);
  const std::string csv = io::spectrum_csv(t);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "n,tau,K,p0_tilde,e_n,E_over_mc2");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 1 + 5);
  EXPECT_EQ(csv, io::spectrum_csv(dirac::spectrum_table(dirac::DOParams(0.5, 0.1), 2)));
}

TEST(Csv, WavefunctionHeader) {
  const auto g = dirac::wavefunction(dirac::DOParams(0.5, 0.1), {1, 1});
  const std::string csv = io::wavefunction_csv(g);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "p_tilde,q,psi1,psi2,f,weight");
  EXPECT_EQ(std::size_t(std::count(csv.begin(), csv.end(), '\n')), 1 + g.size());
}

TEST(Json, SpectrumRoundTrip) {
  const dirac::DOParams p(0.5, 0.1);
  const auto j = io::to_json(dirac::spectrum_table(p, 3), p);
  const auto back = io::json::parse(io::dump(j));
  EXPECT_EQ(back, io::json::parse(io::dump(back)));
}
