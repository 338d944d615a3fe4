#include <gengraph/gengraph.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <map>
#include <string>

using namespace gengraph;

namespace {

const std::filesystem::path data_dir = GENGRAPH_TEST_DATA;

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvariantViolated;
}

std::string message_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

std::size_t involutions(const FiniteGroup& g) {
  return static_cast<std::size_t>(std::count(g.element_orders().begin(), g.element_orders().end(), 2u));
}

}  // namespace

TEST(SpecParser, Examples) {
  const auto c6 = parse_group_spec("C:6");
  ASSERT_EQ(c6.factors.size(), 1u);
  EXPECT_EQ(std::get<FamilyAtom>(c6.factors[0]), (FamilyAtom{Family::cyclic, {6}}));
  EXPECT_EQ(build_group(c6).order(), 6u);

  const auto prod = parse_group_spec("C:4 x C:2");
  ASSERT_EQ(prod.factors.size(), 2u);
  EXPECT_EQ(build_group(prod).order(), 8u);
  EXPECT_EQ(build_group("D:6").order(), 12u);
}

TEST(SpecParser, RoundTripAndWhitespace) {
  for (auto text : {"C:6", "C:4 x C:2", "D:6", "Dic:3 x C:2", "M:7,3,2", "S:4", "A:5", "file:foo/bar.txt x C:2"}) {
    const auto spec = parse_group_spec(text);
    EXPECT_EQ(to_string(spec), text);
    EXPECT_EQ(parse_group_spec(to_string(spec)), spec);
  }
  EXPECT_EQ(parse_group_spec("  C : 4x C:2 "), parse_group_spec("C:4 x C:2"));
  EXPECT_EQ(parse_group_spec("M: 8 , 2 , 3"), parse_group_spec("M:8,2,3"));
}

TEST(SpecParser, Errors) {
  EXPECT_EQ(code_of([] { parse_group_spec(""); }), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of([] { parse_group_spec("C:"); }), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of([] { parse_group_spec("C:4 x"); }), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of([] { parse_group_spec("C:4 C:2"); }), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of([] { parse_group_spec("M:4,2"); }), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of([] { parse_group_spec("Z:4"); }), ErrorCode::UnknownFamily);
  EXPECT_EQ(code_of([] { parse_group_spec("C:99999999999999999999999"); }), ErrorCode::SyntaxError);
}

TEST(BuildGroup, Families) {
  const auto dic2 = build_group("Dic:2");
  EXPECT_EQ(dic2.order(), 8u);
  EXPECT_EQ(involutions(dic2), 1u);
  EXPECT_EQ(dic2.name(), "Q8");
  EXPECT_TRUE(are_isomorphic(build_group("M:3,2,2"), build_group("D:3")));
  EXPECT_TRUE(are_isomorphic(build_group("S:3"), build_group("D:3")));
  EXPECT_EQ(build_group("S:4").order(), 24u);
  EXPECT_EQ(build_group("A:5").order(), 60u);
  EXPECT_EQ(involutions(build_group("D:4")), 5u);
  EXPECT_EQ(build_group("C:2 x C:3").name(), "C2xC3");
}

TEST(BuildGroup, Errors) {
  EXPECT_EQ(code_of([] { build_group("C:0"); }), ErrorCode::BadParameter);
  EXPECT_EQ(code_of([] { build_group("M:4,2,2"); }), ErrorCode::BadParameter);
  EXPECT_EQ(code_of([] { build_group("S:7"); }), ErrorCode::BadParameter);
  EXPECT_EQ(code_of([] { build_group("C:4096"); }), ErrorCode::BadParameter);
  EXPECT_EQ(code_of([] { build_group("C:64 x C:64"); }), ErrorCode::BadParameter);
  EXPECT_EQ(code_of([] { build_group("M:99999999999,99999999999,1"); }), ErrorCode::BadParameter);
  EXPECT_EQ(code_of([] { build_group("file:does-not-exist.txt"); }), ErrorCode::Io);
}

TEST(BuildGroup, FileAtoms) {
  const auto g = build_group(parse_group_spec("file:c6.txt x C:2"), data_dir);
  EXPECT_EQ(g.order(), 12u);
  EXPECT_TRUE(are_isomorphic(g, build_group("C:6 x C:2")));
}

TEST(Corpus, UpTo15) {
  const auto corpus = corpus_up_to_15();
  ASSERT_EQ(corpus.size(), 28u);
  std::map<std::size_t, std::size_t> by_order;
  for (const auto& g : corpus) ++by_order[g.order()];
  const std::map<std::size_t, std::size_t> expected = {{1, 1}, {2, 1},  {3, 1},  {4, 2},  {5, 1},  {6, 2},  {7, 1}, {8, 5},
                                                       {9, 2}, {10, 2}, {11, 1}, {12, 5}, {13, 1}, {14, 2}, {15, 1}};
  EXPECT_EQ(by_order, expected);
  for (const auto& g : corpus)
    if (g.order() == 11) EXPECT_TRUE(g.is_cyclic());
  for (std::size_t i = 0; i < corpus.size(); ++i)
    for (std::size_t j = i + 1; j < corpus.size(); ++j)
      EXPECT_FALSE(are_isomorphic(corpus[i], corpus[j])) << corpus[i].name() << " ~ " << corpus[j].name();
}

TEST(Corpus, ExtendedGroupsArePairwiseDistinct) {
  const auto groups = groups_16_to_24();
  for (const auto& g : groups) EXPECT_GE(g.order(), 16u);
  for (std::size_t i = 0; i < groups.size(); ++i)
    for (std::size_t j = i + 1; j < groups.size(); ++j)
      if (groups[i].order() == groups[j].order())
        EXPECT_FALSE(are_isomorphic(groups[i], groups[j])) << groups[i].name() << " ~ " << groups[j].name();
  EXPECT_EQ(extended_corpus(15).size(), 28u);
  EXPECT_EQ(extended_corpus(24).size(), 28u + groups.size());
}

TEST(CayleyFiles, ReadAndErrors) {
  const auto c6 = read_cayley_file(data_dir / "c6.txt");
  EXPECT_EQ(c6.name(), "c6");
  EXPECT_TRUE(are_isomorphic(c6, cyclic_group(6)));

  const auto shifted = read_cayley_file(data_dir / "c3_shifted.txt");
  EXPECT_TRUE(are_isomorphic(shifted, cyclic_group(3)));

  EXPECT_EQ(code_of([] { read_cayley_file(data_dir / "zero.txt"); }), ErrorCode::BadParameter);
  EXPECT_EQ(code_of([] { read_cayley_file(data_dir / "loop5.txt"); }), ErrorCode::NotAssociative);
  EXPECT_EQ(code_of([] { read_cayley_file(data_dir / "not_latin.txt"); }), ErrorCode::NotLatinSquare);
  EXPECT_NE(message_of([] { read_cayley_file(data_dir / "not_latin.txt"); }).find("not_latin:5:"), std::string::npos);
  EXPECT_EQ(code_of([] { read_cayley_file(data_dir / "missing.txt"); }), ErrorCode::Io);
  EXPECT_EQ(code_of([] { parse_cayley_text("2\n0 1\n1 x\n", "t"); }), ErrorCode::BadParameter);
  EXPECT_EQ(code_of([] { parse_cayley_text("2\n0 1\n", "t"); }), ErrorCode::BadParameter);
  EXPECT_EQ(code_of([] { parse_cayley_text("2\n0 1\n1 0\n1 0\n", "t"); }), ErrorCode::BadParameter);
}

TEST(CayleyFiles, TextRoundTrip) {
  for (const auto& g : extended_corpus(12)) {
    const auto back = parse_cayley_text(to_cayley_text(g), g.name());
    EXPECT_EQ(back.table(), g.table()) << g.name();
  }
}

TEST(Verify, CorpusUpTo15MatchesTheElevenGroups) {
  const auto report = verify_theorem(corpus_up_to_15(), Expectation::all_eleven);
  EXPECT_TRUE(report.summary.match);
  EXPECT_EQ(report.summary.found.size(), 11u);
  auto found = report.summary.found;
  std::sort(found.begin(), found.end());
  EXPECT_EQ(found, (std::vector<std::string>{"C2", "C2xC2", "C3", "C4", "C4xC2", "C5", "C6", "D3", "D4", "D6", "Q8"}));
  for (const auto& r : report.records) {
    EXPECT_NE(r.status, RecordStatus::failed) << r.name << ": " << r.error;
    if (r.name == "C2xC2xC2") {
      EXPECT_EQ(r.status, RecordStatus::not_two_generated);
      EXPECT_TRUE(r.planar());
    }
    if (r.name == "C1") EXPECT_EQ(r.status, RecordStatus::vacuous);
    // The named non-members are rejected.
    if (r.name == "C3xC3" || r.name == "C6xC2" || r.name == "A4") EXPECT_FALSE(r.planar()) << r.name;
  }
}

TEST(Verify, RecordInvariants) {
  const auto report = verify_theorem(extended_corpus(24));
  for (const auto& r : report.records) {
    if (r.status != RecordStatus::in_scope) continue;
    EXPECT_EQ(alpha_product(r.alphas), *r.order_times_p2) << r.name;
    const bool small = *r.order_times_p2 < ExactRatio(6);
    EXPECT_EQ(alpha_product(r.alphas) < ExactRatio(6), small);
    if (r.planar()) EXPECT_TRUE(small) << r.name;
    ASSERT_TRUE(r.verdict);
    if (r.planar())
      EXPECT_TRUE(r.verdict->embedding);
    else
      EXPECT_TRUE(r.verdict->witness);
  }
  EXPECT_TRUE(report.summary.match);
}

TEST(Verify, SmallInputs) {
  const auto c7 = verify_theorem({cyclic_group(7)});
  ASSERT_EQ(c7.records.size(), 1u);
  EXPECT_FALSE(c7.records[0].planar());
  ASSERT_TRUE(c7.records[0].verdict->witness);
  EXPECT_EQ(c7.records[0].verdict->witness->kind, KuratowskiKind::K5);
  EXPECT_TRUE(c7.summary.match);
  EXPECT_TRUE(c7.summary.expected.empty());

  const auto empty = verify_theorem({});
  EXPECT_TRUE(empty.records.empty());
  EXPECT_TRUE(empty.summary.match);

  EXPECT_FALSE(verify_theorem({cyclic_group(7)}, Expectation::all_eleven).summary.match);
}

TEST(Verify, DirectoryCorpus) {
  const auto groups = read_corpus_directory(data_dir / "corpus");
  ASSERT_EQ(groups.size(), 3u);
  const auto report = verify_theorem(groups);
  EXPECT_EQ(report.summary.expected, (std::vector<std::string>{"Q8"}));
  EXPECT_EQ(report.summary.found, (std::vector<std::string>{"Q8"}));
  EXPECT_TRUE(report.summary.match);
  EXPECT_EQ(code_of([] { read_corpus_directory(data_dir / "nowhere"); }), ErrorCode::Io);
}

TEST(Verify, JsonIsDeterministicAndExact) {
  const auto a = to_json(verify_theorem(corpus_up_to_15()), "test", "default").dump();
  const auto b = to_json(verify_theorem(corpus_up_to_15()), "test", "default").dump();
  EXPECT_EQ(a, b);
  const auto j = nlohmann::json::parse(a);
  EXPECT_EQ(j["version"], "test");
  EXPECT_EQ(j["corpus"], "default");
  EXPECT_TRUE(j["summary"]["match"].get<bool>());
  EXPECT_EQ(j["records"].size(), 28u);
  for (const auto& r : j["records"]) {
    if (r["name"] == "A4") {
      EXPECT_EQ(r["p2"]["num"], 2);
      EXPECT_EQ(r["p2"]["den"], 3);
      EXPECT_EQ(r["delta"]["edges"], 48);
      EXPECT_FALSE(r["verdict"]["planar"].get<bool>());
      EXPECT_TRUE(r["verdict"]["witness"].contains("kind"));
    }
    if (r["name"] == "Q8") {
      EXPECT_TRUE(r["verdict"]["planar"].get<bool>());
      EXPECT_EQ(r["verdict"]["embedding"]["rotation"].size(), 7u);
      EXPECT_EQ(r["target_label"], "Q8");
    }
  }
}
