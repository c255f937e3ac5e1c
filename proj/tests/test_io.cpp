#include <gtest/gtest.h>

#include <filesystem>

#include <leibniz/io/document.hpp>
#include <leibniz/io/spec.hpp>

#include "support/mini_schema.hpp"
#include "support/random.hpp"

using namespace leibniz;
using namespace leibniz::io;
namespace fam = leibniz::families;

namespace {

const std::string samples = LEIBNIZ_SAMPLES_DIR;
const std::string schemas = LEIBNIZ_SCHEMA_DIR;

std::string error_of(std::string_view text)
{
    try {
        (void)parse_document(text, "doc.json");
    } catch (const ParseError& e) {
        return e.what();
    }
    return "";
}

} // namespace

TEST(Spec, Families)
{
    auto s = parse_spec("F3:n=6,alpha=1");
    ASSERT_TRUE(s.family.has_value());
    EXPECT_EQ(*s.family, FamilyTag::F3);
    EXPECT_EQ(s.n, 6u);
    EXPECT_EQ(s.alpha, 1);
    EXPECT_EQ(parse_spec("RF1:n=4").n, 4u);
    auto f = parse_spec("file:some/path.json");
    EXPECT_TRUE(f.is_file());
    EXPECT_EQ(f.path, "some/path.json");
    EXPECT_TRUE(build("RF1:n=5").same_table(fam::r_f1(5)));
    EXPECT_TRUE(build("F3:n=6,alpha=1").same_table(fam::f3(6, 1)));
}

TEST(Spec, Rejections)
{
    for (const char* bad : {"F1", "F9:n=4", "F1:n=", "F1:n=x", "F1:n=-3", "F1:alpha=1", "F1:n=4,alpha=0",
                            "F1:n=4,n=5", "F1:n=4,", "F1:m=4", "file:", "F1:n=513", "F1: n=4", "F1:=4"})
        EXPECT_THROW(parse_spec(bad), ParseError) << bad;
    EXPECT_THROW(build("F3:n=5,alpha=1"), ParameterError);
    EXPECT_THROW(build("F3:n=6,alpha=7"), ParameterError);
    EXPECT_THROW(build("F1:n=2"), ParameterError);
    EXPECT_THROW(build("file:/nonexistent/x.json"), ParseError);
}

TEST(Document, ExportExamples)
{
    auto j = nlohmann::json::parse(to_document(fam::f1(4)));
    EXPECT_EQ(j["brackets"].size(), 2u);
    EXPECT_EQ(j["brackets"][0], nlohmann::json::parse(R"({"i":2,"j":1,"terms":[{"k":3,"c":"1"}]})"));
    auto z = to_document(fam::abelian(2));
    EXPECT_NE(z.find("\"brackets\": []"), std::string::npos);
    EXPECT_EQ(z, read_file(samples + "/abelian2.json"));
}

TEST(Document, MatchesSchema)
{
    auto schema = leibniz::testing::MiniSchema::load(schemas + "/algebra-document.schema.json");
    for (const auto& L : {fam::f1(4), fam::r_f1(5), fam::f3(6, 1), fam::abelian(2)}) {
        auto errors = schema.validate(nlohmann::json::parse(to_document(L)));
        EXPECT_TRUE(errors.empty()) << errors.front();
    }
    EXPECT_FALSE(schema.validate(nlohmann::json::parse(R"({"dim":1,"basis":["a"],"brackets":[],"x":1})")).empty());
}

TEST(Document, RoundTrip)
{
    for (const auto& L : {fam::r_f1(5), fam::f2(7), fam::f3(6, 1), fam::abelian(2), LeibnizAlgebra(1, {})}) {
        const auto text = to_document(L);
        const auto back = parse_document(text);
        EXPECT_EQ(back, L);
        EXPECT_EQ(to_document(back), text);
    }
}

TEST(Document, RandomRoundTrip)
{
    leibniz::testing::Gen g(8);
    for (int t = 0; t < 30; ++t) {
        const auto n = static_cast<std::size_t>(g.integer(1, 5));
        std::vector<TableEntry> entries;
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 1; j <= n; ++j)
                if (g.integer(0, 2) == 0)
                    entries.push_back({i, j, g.vector(n, 0.5)});
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < n; ++i)
            labels.push_back("b\"" + std::to_string(i)); // exercise escaping
        LeibnizAlgebra L(n, labels, entries);
        EXPECT_EQ(parse_document(to_document(L)), L);
    }
}

TEST(Document, NonCanonicalCoefficientsNormalize)
{
    auto L = parse_document(R"({"dim":2,"basis":["a","b"],"brackets":[{"i":1,"j":1,"terms":[{"k":2,"c":"2/4"}]}]})");
    EXPECT_EQ(L.product(1, 1), (Vector{Rational(0), Rational(1, 2)}));
    EXPECT_NE(to_document(L).find("\"1/2\""), std::string::npos);
}

TEST(Document, ErrorsCarryLineNumbers)
{
    try {
        (void)load_document(samples + "/broken.json");
        FAIL() << "broken.json accepted";
    } catch (const ParseError& e) {
        const std::string msg = e.what();
        EXPECT_NE(msg.find("broken.json:6:"), std::string::npos) << msg;
        EXPECT_NE(msg.find("/brackets/1/terms/0/k"), std::string::npos) << msg;
        EXPECT_NE(msg.find("outside 1..4"), std::string::npos) << msg;
    }
    const char* multi = "{\n\"dim\": 2,\n\"basis\": [\"a\", \"b\"],\n\"brackets\": [\n"
                        "{\"i\": 1, \"j\": 1, \"terms\": [{\"k\": 1, \"c\": \"1/0\"}]}\n]}";
    EXPECT_EQ(error_of(multi).rfind("doc.json:5: /brackets/0/terms/0/c", 0), 0u) << error_of(multi);
    EXPECT_EQ(error_of("{\n\"dim\": 2,\n\"basis\": [\"a\"],\n\"brackets\": []}").rfind("doc.json:3: /basis", 0), 0u);
    EXPECT_EQ(error_of("{\n\"dim\": 1,\n  \"basis\": [\"a\"]\n  \"brackets\": []}").rfind("doc.json:4: malformed JSON", 0),
              0u);
}

TEST(Document, ValidationRules)
{
    auto doc = [](const std::string& brackets, int dim = 2) {
        std::string basis = dim == 2 ? R"(["a","b"])" : R"(["a"])";
        return R"({"dim":)" + std::to_string(dim) + R"(,"basis":)" + basis + R"(,"brackets":)" + brackets + "}";
    };
    EXPECT_EQ(error_of(doc("[]")), "");
    const std::vector<std::pair<std::string, std::string>> cases{
        {doc(R"([{"i":1,"j":1,"terms":[{"k":1,"c":"1"}]},{"i":1,"j":1,"terms":[{"k":2,"c":"1"}]}])"), "duplicate product"},
        {doc(R"([{"i":1,"j":1,"terms":[{"k":1,"c":"1"},{"k":1,"c":"2"}]}])"), "duplicate output index"},
        {doc(R"([{"i":1,"j":1,"terms":[{"k":1,"c":"0"}]}])"), "nonzero"},
        {doc(R"([{"i":1,"j":1,"terms":[{"k":1,"c":1}]}])"), "rational string"},
        {doc(R"([{"i":1,"j":1,"terms":[{"k":1,"c":"0.5"}]}])"), "/c"},
        {doc(R"([{"i":1,"j":1,"terms":[]}])"), "non-empty"},
        {doc(R"([{"i":0,"j":1,"terms":[{"k":1,"c":"1"}]}])"), "outside"},
        {doc(R"([{"i":1,"j":1,"terms":[{"k":1,"c":"1"}],"extra":1}])"), "unknown key"},
        {doc(R"([{"i":1,"terms":[{"k":1,"c":"1"}]}])"), "missing key \"j\""},
        {doc(R"([{"i":1.5,"j":1,"terms":[{"k":1,"c":"1"}]}])"), "integer index"},
        {doc("{}"), "must be an array"},
        {R"({"dim":0,"basis":[],"brackets":[]})", "positive integer"},
        {R"({"dim":1,"basis":[3],"brackets":[]})", "strings"},
        {R"({"basis":[],"brackets":[]})", "missing key \"dim\""},
        {"[]", "expected an object"},
        {"", "malformed JSON"},
    };
    for (const auto& [text, needle] : cases) {
        auto msg = error_of(text);
        EXPECT_NE(msg.find(needle), std::string::npos) << text << " -> " << msg;
    }
}

TEST(Document, SaveAndLoad)
{
    const auto path = std::filesystem::temp_directory_path() / "leibniz_test_io_roundtrip.json";
    save_document(fam::r_f1(4), path.string());
    EXPECT_EQ(load_document(path.string()), fam::r_f1(4));
    std::filesystem::remove(path);
    EXPECT_THROW(save_document(fam::f1(3), "/nonexistent-dir/x.json"), ParseError);
}
