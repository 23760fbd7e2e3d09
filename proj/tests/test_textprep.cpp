#include "pundit/textprep.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>

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

std::set<std::string> unit_keys(const std::vector<ContentUnit>& units) {
    std::set<std::string> keys;
    for (const auto& u : units) keys.insert(u.key);
    return keys;
}

const char* kBanker = "I used to be a banker, but I lost interest.";
const char* kChurch =
    "When the church bought gas for their annual barbecue, proceeds went from the sacred to the "
    "propane.";

}  // namespace

TEST_CASE("tokenize numbers words and sidelines punctuation") {
    auto tokens = tokenize(kBanker);
    std::map<std::string, int> pos;
    int punct = 0;
    for (const auto& t : tokens) {
        if (t.tag == PosTag::punctuation) {
            CHECK(t.position == 0);
            ++punct;
        } else if (!pos.count(t.surface)) {
            pos[t.surface] = t.position;
        }
    }
    CHECK(punct == 2);  // comma and period
    CHECK(pos["i"] == 1);
    CHECK(pos["used"] == 2);
    CHECK(pos["to"] == 3);
    CHECK(pos["be"] == 4);
    CHECK(pos["a"] == 5);
    CHECK(pos["banker"] == 6);
    CHECK(pos["but"] == 7);
    CHECK(pos["lost"] == 9);
    CHECK(pos["interest"] == 10);
}

TEST_CASE("tokenize edge cases") {
    CHECK(tokenize("").empty());
    auto hello = tokenize("Hello.");
    REQUIRE(hello.size() == 2);
    CHECK(hello[0].surface == "hello");
    CHECK(hello[0].position == 1);
    CHECK(hello[1].surface == ".");
    CHECK(hello[1].tag == PosTag::punctuation);
    CHECK(hello[1].position == 0);

    // word positions stay consecutive across punctuation
    auto tokens = tokenize("one, two; three.");
    std::vector<int> positions;
    for (const auto& t : tokens)
        if (t.tag != PosTag::punctuation) positions.push_back(t.position);
    CHECK(positions == std::vector<int>{1, 2, 3});

    // apostrophes stay inside words
    auto apo = tokenize("it's fine");
    CHECK(apo[0].surface == "it's");
}

TEST_CASE("tagger resolves the fixture vocabulary") {
    auto tag_of = [&](const std::string& text, const std::string& word) {
        for (const auto& t : pos_tag(tokenize(text), db(), lexicon()))
            if (t.surface == word) return t.tag;
        throw std::runtime_error("token not found: " + word);
    };
    CHECK(tag_of(kBanker, "banker") == PosTag::noun);
    CHECK(tag_of(kBanker, "lost") == PosTag::verb);
    CHECK(tag_of(kBanker, "used") == PosTag::verb);
    CHECK(tag_of(kBanker, "be") == PosTag::verb);
    CHECK(tag_of(kBanker, "interest") == PosTag::noun);
    CHECK(tag_of(kChurch, "the") == PosTag::determiner);
    CHECK(tag_of(kBanker, "i") == PosTag::pronoun);
    CHECK(tag_of(kBanker, "but") == PosTag::conjunction);
    CHECK(tag_of(kBanker, "to") == PosTag::preposition);
    CHECK(tag_of(kChurch, "church") == PosTag::noun);
    CHECK(tag_of(kChurch, "bought") == PosTag::verb);
    CHECK(tag_of(kChurch, "annual") == PosTag::adjective);
    CHECK(tag_of(kChurch, "proceeds") == PosTag::noun);
    CHECK(tag_of(kChurch, "went") == PosTag::verb);
    // absent from the database, resolved by the -ed suffix rule
    CHECK(tag_of(kChurch, "sacred") == PosTag::verb);
    // suffix fallbacks
    CHECK(tag_of("they moved swiftly", "swiftly") == PosTag::adverb);
    CHECK(tag_of("a gorgeous view", "gorgeous") == PosTag::adjective);
    // unknown word defaults to noun
    CHECK(tag_of("the fnord", "fnord") == PosTag::noun);
}

TEST_CASE("extract_units keeps lemmatized nouns, verbs and adjectives") {
    auto units = extract_units(pos_tag(tokenize(kBanker), db(), lexicon()), thesaurus(), db());
    CHECK(unit_keys(units) == std::set<std::string>{"use", "be", "banker", "lose", "interest"});
    for (const auto& u : units) {
        CHECK_FALSE(u.key.empty());
        CHECK(u.key == to_lower(u.key));
        CHECK(std::is_sorted(u.positions.begin(), u.positions.end()));
        if (!u.is_collocation)
            CHECK((u.pos == PosTag::noun || u.pos == PosTag::verb || u.pos == PosTag::adjective));
    }
}

TEST_CASE("church joke yields the expected unit set") {
    auto units = extract_units(pos_tag(tokenize(kChurch), db(), lexicon()), thesaurus(), db());
    CHECK(unit_keys(units) == std::set<std::string>{"church", "buy", "gas", "annual", "barbecue",
                                                    "proceeds", "go", "sacred", "propane"});
}

TEST_CASE("stop-word-only input yields no units") {
    auto units = extract_units(pos_tag(tokenize("but for the"), db(), lexicon()), thesaurus(), db());
    CHECK(units.empty());
}

TEST_CASE("thesaurus-attested collocations become units, components stay") {
    SectionMap map = SectionMap::load(kDataDir + "/section_map_1911.tsv");
    auto idx = parse_roget("#776. Loss.-- V. lose interest.\n#455. Curiosity.-- N. interest.", map);
    auto units = extract_units(pos_tag(tokenize(kBanker), db(), lexicon()), idx, db());
    auto keys = unit_keys(units);
    CHECK(keys.count("lose interest") == 1);
    CHECK(keys.count("lose") == 1);
    CHECK(keys.count("interest") == 1);
    for (const auto& u : units) {
        if (u.key == "lose interest") {
            CHECK(u.is_collocation);
            CHECK(u.positions == std::vector<int>{10});  // head word position
            CHECK(u.pos == PosTag::noun);
        }
    }
}

TEST_CASE("verb-preposition collocations match when attested") {
    SectionMap map = SectionMap::load(kDataDir + "/section_map_1911.tsv");
    auto idx = parse_roget("#459. Care.-- V. attend to.", map);
    auto units = extract_units(pos_tag(tokenize("We attend to the garden."), db(), lexicon()),
                               idx, db());
    auto keys = unit_keys(units);
    CHECK(keys.count("attend to") == 1);
    for (const auto& u : units)
        if (u.key == "attend to") {
            CHECK(u.is_collocation);
            CHECK(u.pos == PosTag::verb);
        }
}

TEST_CASE("repeated words merge into one unit with all positions") {
    auto units = extract_units(
        pos_tag(tokenize("interest breeds interest."), db(), lexicon()), thesaurus(), db());
    bool found = false;
    for (const auto& u : units) {
        if (u.key == "interest") {
            found = true;
            CHECK(u.positions == std::vector<int>{1, 3});
        }
    }
    CHECK(found);
}

TEST_CASE("unit keys are unique and ordered by first position") {
    auto units = extract_units(pos_tag(tokenize(kChurch), db(), lexicon()), thesaurus(), db());
    std::set<std::string> seen;
    int last_first = 0;
    for (const auto& u : units) {
        CHECK(seen.insert(u.key).second);
        CHECK(u.positions.front() >= last_first);
        last_first = u.positions.front();
    }
}
