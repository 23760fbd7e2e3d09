#include "pundit/semvec.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace pundit;

namespace {

const std::string kDataDir = PUNDIT_DATA_DIR;

const WordnetDb& db() {
    static WordnetDb instance = WordnetDb::load_dir(kDataDir + "/fixtures/wordnet");
    return instance;
}

const ClosedClassLexicon& lexicon() {
    static ClosedClassLexicon lex = ClosedClassLexicon::load(kDataDir + "/closed_class.tsv");
    return lex;
}

const ThesaurusIndex& thesaurus() {
    static ThesaurusIndex idx = ingest_thesaurus_file(
        kDataDir + "/fixtures/roget_fixture.txt", kDataDir + "/section_map_1911.tsv");
    return idx;
}

std::vector<ContentUnit> banker_units() {
    return extract_units(
        pos_tag(tokenize("I used to be a banker, but I lost interest."), db(), lexicon()),
        thesaurus(), db());
}

ContentUnit make_unit(const std::string& key, PosTag pos = PosTag::noun) {
    ContentUnit u;
    u.key = key;
    u.positions = {1};
    u.pos = pos;
    return u;
}

}  // namespace

TEST_CASE("banker joke field assignment matches the fixture mapping") {
    auto fields = assign_fields(banker_units(), thesaurus(), db());
    REQUIRE(fields.unit_fields.size() == 5);
    CHECK(fields.unit_fields.at("use") == std::set<int>{24, 30});
    CHECK(fields.unit_fields.at("be") == std::set<int>{0, 19});
    CHECK(fields.unit_fields.at("banker") == std::set<int>{30, 31});
    CHECK(fields.unit_fields.at("lose") == std::set<int>{19, 21, 26, 30});
    CHECK(fields.unit_fields.at("interest") == std::set<int>{1, 7, 16, 24, 25, 30, 31});
    CHECK(fields.fallback_applied.empty());
}

TEST_CASE("banker joke semantic vector, component by component") {
    auto v = vectorize(assign_fields(banker_units(), thesaurus(), db()));
    const std::array<int, kSectionCount> expected = {1, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0,
                                                     0, 0, 0, 0, 1, 0, 0, 2, 0, 1, 0, 0,
                                                     2, 1, 1, 0, 0, 0, 4, 2, 0, 0};
    CHECK(v.counts == expected);
}

TEST_CASE("vector csv serialization round-trips") {
    auto v = vectorize(assign_fields(banker_units(), thesaurus(), db()));
    CHECK(SemanticVector::from_csv(v.to_csv()) == v);
    CHECK_THROWS_AS(SemanticVector::from_csv("1,2,3"), Error);
    CHECK_THROWS_AS(SemanticVector::from_csv("not,numbers"), Error);
}

TEST_CASE("missing words fall back to their hypernyms") {
    // "dog" is not a thesaurus entry; its hypernym "canine" is
    std::vector<ContentUnit> units{make_unit("dog")};
    auto fields = assign_fields(units, thesaurus(), db());
    CHECK(fields.unit_fields.at("dog") == thesaurus().sections_of("canine"));
    CHECK(fields.fallback_applied.count("dog") == 1);
}

TEST_CASE("words with no thesaurus or wordnet footprint resolve to nothing") {
    std::vector<ContentUnit> units{make_unit("qwertyuiop")};
    auto fields = assign_fields(units, thesaurus(), db());
    CHECK(fields.unit_fields.at("qwertyuiop").empty());
    CHECK(fields.fallback_applied.empty());
    CHECK(vectorize(fields) == SemanticVector{});
}

TEST_CASE("empty assignment gives the zero vector") {
    CHECK(vectorize(FieldAssignment{}).sum() == 0);
}

TEST_CASE("single unit in two sections is one-hot at both") {
    FieldAssignment fields;
    fields.unit_fields["word"] = {3, 7};
    auto v = vectorize(fields);
    for (int k = 0; k < kSectionCount; ++k)
        CHECK(v.counts[static_cast<size_t>(k)] == ((k == 3 || k == 7) ? 1 : 0));
}

TEST_CASE("vectorize agrees with a brute-force count on random assignments") {
    std::mt19937 rng(777u);
    for (int round = 0; round < 200; ++round) {
        FieldAssignment fields;
        size_t n_units = rng() % 12;
        for (size_t u = 0; u < n_units; ++u) {
            std::set<int> sections;
            size_t n_sections = rng() % 5;
            for (size_t s = 0; s < n_sections; ++s)
                sections.insert(static_cast<int>(rng() % kSectionCount));
            fields.unit_fields["u" + std::to_string(u)] = sections;
        }
        auto v = vectorize(fields);
        for (int k = 0; k < kSectionCount; ++k) {
            int manual = 0;
            for (const auto& [_, sections] : fields.unit_fields)
                if (sections.count(k)) ++manual;
            CHECK(v.counts[static_cast<size_t>(k)] == manual);
        }
    }
}

TEST_CASE("renaming unit keys leaves the vector unchanged") {
    auto fields = assign_fields(banker_units(), thesaurus(), db());
    FieldAssignment renamed;
    int i = 0;
    for (const auto& [key, sections] : fields.unit_fields)
        renamed.unit_fields["renamed_" + std::to_string(i++)] = sections;
    CHECK(vectorize(fields) == vectorize(renamed));
}

TEST_CASE("removing a unit never increases any component") {
    auto fields = assign_fields(banker_units(), thesaurus(), db());
    auto base = vectorize(fields);
    for (const auto& [key, _] : fields.unit_fields) {
        FieldAssignment reduced = fields;
        reduced.unit_fields.erase(key);
        auto v = vectorize(reduced);
        for (size_t k = 0; k < v.counts.size(); ++k) CHECK(v.counts[k] <= base.counts[k]);
    }
}

TEST_CASE("counts are bounded by the number of units") {
    auto fields = assign_fields(banker_units(), thesaurus(), db());
    auto v = vectorize(fields);
    for (int c : v.counts) CHECK(c <= static_cast<int>(fields.unit_fields.size()));
}
