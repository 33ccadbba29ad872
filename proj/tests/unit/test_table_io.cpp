#include "altwords/table_io.hpp"

#include <doctest.h>

#include <sstream>

using namespace altwords;

TEST_CASE("plain table marks the length-1 column of 312-type patterns") {
  const auto t = build_table(VincularPattern::parse("312"), Orientation::UpDown, 5, 9);
  const auto text = to_plain(t);
  CHECK(text.find("5*") != std::string::npos);
  CHECK(text.find("4089") != std::string::npos);
  CHECK(text.find("\n* ") != std::string::npos);

  const auto plain132 = to_plain(build_table(VincularPattern::parse("132"), Orientation::UpDown, 5, 9));
  CHECK(plain132.find('*') == std::string::npos);
  CHECK(plain132.find("2034") != std::string::npos);
}

TEST_CASE("csv layout") {
  const auto t = build_table(VincularPattern::parse("1-2-3"), Orientation::UpDown, 2, 4);
  const auto csv = to_csv(t);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "k,n,count");
  std::vector<std::string> rows;
  while (std::getline(in, line)) rows.push_back(line);
  CHECK(rows == std::vector<std::string>{"2,0,1", "2,1,2", "2,2,1", "2,3,1", "2,4,1"});
}

TEST_CASE("json round trip") {
  for (const char* p : {"312", "1-32", "3-2-1"}) {
    for (auto o : {Orientation::UpDown, Orientation::DownUp}) {
      const auto t = build_table(VincularPattern::parse(p), o, 4, 7);
      const auto back = table_from_json(to_json(t));
      CHECK(back == t);
      CHECK(format_table(back, OutputFormat::Json) == to_json(t));
    }
  }
  const auto json = to_json(build_table(VincularPattern::parse("312"), Orientation::UpDown, 3, 1));
  CHECK(json.find("\"seed_convention_differs\": true") != std::string::npos);
}

TEST_CASE("json reader rejects bad input") {
  CHECK_THROWS_AS(table_from_json("not json"), std::invalid_argument);
  CHECK_THROWS_AS(table_from_json(R"({"pattern":"132","orientation":"up-down","entries":[]})"), std::invalid_argument);
  CHECK_THROWS_AS(table_from_json(R"({"pattern":"132","orientation":"up-down","entries":[{"k":2,"n":0,"count":1},{"k":2,"n":2,"count":1}]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(table_from_json(R"({"pattern":"1-1-2","orientation":"up-down","entries":[{"k":2,"n":0,"count":1}]})"),
                  std::invalid_argument);
  // counts beyond 64 bits travel as strings
  const auto big = table_from_json(
      R"({"pattern":"132","orientation":"up-down","entries":[{"k":2,"n":0,"count":"123456789012345678901234567890"}]})");
  CHECK(big.at(2, 0).str() == "123456789012345678901234567890");
}

TEST_CASE("output format names") {
  CHECK(parse_output_format("csv") == OutputFormat::Csv);
  CHECK(parse_output_format("json") == OutputFormat::Json);
  CHECK(parse_output_format("plain") == OutputFormat::Plain);
  CHECK_THROWS_AS(parse_output_format("xml"), std::invalid_argument);
}
