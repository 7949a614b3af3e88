#include "arithmos/format.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

using namespace arithmos;

namespace {

std::string read_golden(const std::string& name)
{
    std::ifstream in(std::string(ARITHMOS_GOLDEN_DIR) + "/" + name, std::ios::binary);
    EXPECT_TRUE(in) << "missing golden file " << name;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST(TableCsv, GoldenUpTo17)
{
    EXPECT_EQ(table_csv(classification_table(17)), read_golden("table_17.csv"));
}

TEST(TableCsv, HeaderIsFixed)
{
    const auto csv = table_csv(classification_table(1));
    EXPECT_EQ(csv, "n,plane_class,side_or_figure,solid_class,line_kind\n1,square,1,cube,length\n");
}

TEST(TableCsv, RoundTrip)
{
    for (std::uint64_t max : {1ULL, 2ULL, 17ULL, 64ULL, 1000ULL}) {
        const auto t = classification_table(max);
        EXPECT_EQ(table_from_csv(table_csv(t)), t) << max;
    }
}

TEST(TableJson, RoundTrip)
{
    for (std::uint64_t max : {1ULL, 17ULL, 729ULL}) {
        const auto t = classification_table(max);
        const auto text = table_json(t).dump(2);
        EXPECT_EQ(table_from_json(nlohmann::ordered_json::parse(text)), t) << max;
    }
}

TEST(TableJson, CarriesPowerCount)
{
    const auto j = table_json(classification_table(17));
    EXPECT_EQ(j.at("power_count").get<std::string>(), "13");
    EXPECT_EQ(j.at("rows").size(), 17u);
    EXPECT_EQ(j.at("rows")[7].at("solid_side_or_figure").get<std::string>(), "2");
}

TEST(TableCsv, ParserRejectsInconsistentRows)
{
    const std::string header = std::string(kCsvHeader) + "\n";
    EXPECT_THROW(table_from_csv("n,plane\n1,square,1,cube,length\n"), FormatError);
    EXPECT_THROW(table_from_csv(header + "1,square,1,cube,power\n"), FormatError);
    EXPECT_THROW(table_from_csv(header + "1,square,1,cube,length\n2,square,1,parallelepipedal,power\n"), FormatError);
    EXPECT_THROW(table_from_csv(header + "1,square,1,cube,length\n2,oblong,2x1,parallelepipedal,power\n"), FormatError);
    EXPECT_THROW(table_from_csv(header + "1,square,1,cube,length\n3,oblong,1x3,parallelepipedal,power\n"), FormatError);
    EXPECT_THROW(table_from_csv(header + "1,square,1,parallelepipedal,length\n"), FormatError);
    EXPECT_THROW(table_from_csv(header + "0,square,1,cube,length\n"), FormatError);
    EXPECT_THROW(table_from_csv(header), FormatError);
    EXPECT_THROW(table_from_csv(header + "1,square,1,cube\n"), FormatError);
}

TEST(TableText, EndsWithPowerCount)
{
    const auto text = table_text(classification_table(17));
    EXPECT_NE(text.find("power_count(17) = 13\n"), std::string::npos);
    EXPECT_EQ(text.rfind("n         plane", 0), 0u);
}

TEST(ClassifyText, FifteenShowsBothRectangles)
{
    const auto text = classify_text(15);
    EXPECT_NE(text.find("plane: oblong, figure (1,15)"), std::string::npos);
    EXPECT_NE(text.find("figures: (1,15) (3,5)"), std::string::npos);
    EXPECT_NE(text.find("solid: parallelepipedal, figure (1,1,15)"), std::string::npos);
}

TEST(ClassifyJson, SquareAndCube)
{
    const auto j = classify_json(64);
    EXPECT_EQ(j.at("plane_class"), "square");
    EXPECT_EQ(j.at("side_or_figure"), "8");
    EXPECT_EQ(j.at("solid_class"), "cube");
    EXPECT_EQ(j.at("solid_side_or_figure"), "4");
    EXPECT_EQ(j.at("line_kind"), "length");
}

TEST(VerdictText, Commensurability)
{
    EXPECT_EQ(commensurability_text(8, 2, surd_ratio_commensurable(8, 2)), "sqrt(8) : sqrt(2) = 2/1, commensurable\n");
    EXPECT_EQ(commensurability_text(2, 3, surd_ratio_commensurable(2, 3)),
              "sqrt(2) : sqrt(3) incommensurable, 2/3 is not a ratio of square numbers\n");
}

TEST(OracleJson, EchoesBound)
{
    const auto j = oracle_json(oracle_root_rational(2, Degree::square, 77));
    EXPECT_EQ(j.at("search_bound"), "77");
    EXPECT_TRUE(j.at("found").is_null());
}
