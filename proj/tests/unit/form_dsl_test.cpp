#include <gtest/gtest.h>

#include "exform/catalog.hpp"
#include "exform/form_dsl.hpp"
#include "symbolic_gen.hpp"

namespace exform {
namespace {

const std::vector<std::string> kXY{"x1", "x2", "y1", "y2"};
const std::vector<std::string> kTXY{"t", "x1", "x2", "y1", "y2"};

DiffForm parse(const std::vector<std::string>& coords, const std::string& body) {
  return parse_form({coords, body, {}});
}

TEST(ParseForm, OmegaZero) {
  DiffForm omega0 = parse(kXY, "exp(x1*y1+x2*y2)*dx1/\\dx2 + dy1/\\dy2");
  EXPECT_EQ(omega0, example_catalog()[0].form("omega0"));
  EXPECT_EQ(omega0.degree(), 2);
}

TEST(ParseForm, Gamma) {
  DiffForm gamma = parse(kTXY, "t^-1*dt + x1*dy1 + x2*dy2");
  EXPECT_EQ(gamma, example_catalog()[1].form("gamma"));
}

TEST(ParseForm, RepeatedDifferentialIsZero) {
  DiffForm z = parse(kXY, "dx1/\\dx1");
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.degree(), 2);
}

TEST(ParseForm, UnicodeWedgeAndRationals) {
  EXPECT_EQ(parse(kXY, "dx1 ∧ dx2"), parse(kXY, "dx1/\\dx2"));
  EXPECT_EQ(parse(kXY, "3/4*dx1"), parse(kXY, "0.75*dx1"));
  EXPECT_EQ(parse(kXY, "-dx1 + 2*dx1"), parse(kXY, "dx1"));
  EXPECT_EQ(parse(kXY, "x1*(dy1 + dy2)"), parse(kXY, "x1*dy1 + x1*dy2"));
}

TEST(ParseForm, BareScalarIsDegreeZero) {
  DiffForm c = parse(kXY, "x1*y1 + 2");
  EXPECT_EQ(c.degree(), 0);
}

TEST(ParseForm, ZeroDegreeHint) {
  DiffForm z = parse_form({kXY, "0", 3});
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.degree(), 3);
}

struct BadInput {
  std::string body;
  int column;
};

TEST(ParseForm, ErrorsCarryPositions) {
  const std::vector<BadInput> cases{
      {"dx1 + dz", 7},           // undeclared coordinate
      {"dx1 + dx1/\\dx2", 5},    // mixed degree
      {"x1^0.5*dx1", 4},         // non-integer exponent
      {"dx1 dx2", 5},            // missing operator
      {"(dx1", 5},               // unbalanced
      {"dx1 / dx2", 5},          // bare division
      {"dx1*dx2", 4},            // '*' between forms
      {"exp(dx1)", 4},           // non-polynomial exponent
      {"x1 $ 2", 4},             // bad character
      {"", 1},                   // empty
  };
  for (const auto& c : cases) {
    try {
      parse(kXY, c.body);
      ADD_FAILURE() << "accepted: " << c.body;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.line(), 1) << c.body;
      EXPECT_EQ(e.column(), c.column) << c.body << ": " << e.what();
    }
  }
}

TEST(PrintForm, CanonicalText) {
  EXPECT_EQ(print_form(parse(kXY, "dy1/\\dy2 + exp(x2*y2 + x1*y1)*dx1/\\dx2")),
            "exp(x1*y1 + x2*y2)*dx1/\\dx2 + dy1/\\dy2");
  EXPECT_EQ(print_form(DiffForm(kXY, 2)), "0");
  EXPECT_EQ(print_form(example_catalog()[0].form("dbeta0")), "dx1/\\dy1 + dx2/\\dy2");
  EXPECT_EQ(print_form(parse(kTXY, "t^-1*dt - x1*dy1")), "t^-1*dt - x1*dy1");
}

TEST(PrintForm, RoundTripOnRandomForms) {
  CounterRng rng(71);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = static_cast<int>(rng.uniform(1, 5));
    const auto coords = testing::coordinate_names(n);
    const int degree = static_cast<int>(rng.uniform(0, n));
    DiffForm omega = testing::random_diff_form(coords, degree, rng);
    const std::string text = print_form(omega);
    DiffForm back = parse_form({coords, text, degree});
    EXPECT_EQ(back, omega) << text;
    EXPECT_EQ(print_form(back), text);
  }
}

TEST(PrintForm, CatalogRoundTrip) {
  for (const auto& entry : example_catalog()) {
    for (const auto& [name, form] : entry.forms) {
      EXPECT_EQ(parse_form({entry.coords, print_form(form), form.degree()}), form) << name;
    }
  }
}

TEST(ParseScalar, ValuesAndErrors) {
  ScalarExpr s = parse_scalar(kTXY, "t^2 + 1");
  EXPECT_EQ(s.derivative(0), parse_scalar(kTXY, "2*t"));
  EXPECT_TRUE(parse_scalar(kTXY, "0").is_zero());
  EXPECT_THROW(parse_scalar(kTXY, "dt"), ParseError);
  EXPECT_EQ(print_scalar(parse_scalar(kTXY, "x1*exp(t)"), kTXY), "x1*exp(t)");
}

TEST(ParseCoords, Validation) {
  EXPECT_EQ(parse_coords("x1, x2,y1"), (std::vector<std::string>{"x1", "x2", "y1"}));
  EXPECT_THROW(parse_coords("x1, x1"), ParseError);
  EXPECT_THROW(parse_coords("x1, 2y"), ParseError);
  EXPECT_THROW(parse_coords("exp"), ParseError);
}

TEST(FormFile, ParseAndPrint) {
  const std::string text =
      "# example\n"
      "coords: x1, x2, y1, y2\n"
      "\n"
      "omega0 = exp(x1*y1 + x2*y2)*dx1/\\dx2 + dy1/\\dy2\n"
      "beta0 = x1*dy1 + x2*dy2\n";
  FormFile file = parse_form_file(text);
  ASSERT_EQ(file.forms.size(), 2u);
  ASSERT_NE(file.find("beta0"), nullptr);
  EXPECT_EQ(file.find("missing"), nullptr);
  FormFile again = parse_form_file(print_form_file(file));
  EXPECT_EQ(again.coords, file.coords);
  ASSERT_EQ(again.forms.size(), 2u);
  EXPECT_EQ(again.forms[0].second, file.forms[0].second);
  EXPECT_EQ(print_form_file(again), print_form_file(file));
}

TEST(FormFile, ErrorLines) {
  try {
    parse_form_file("coords: x, y\nok = dx\nbad = dx + dz\n");
    ADD_FAILURE();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
  EXPECT_THROW(parse_form_file("a = dx\n"), ParseError);
  EXPECT_THROW(parse_form_file("coords: x\na = dx\na = dx\n"), ParseError);
  EXPECT_THROW(parse_form_file("coords: x\njunk\n"), ParseError);
}

// Random byte strings over the grammar's alphabet must parse or raise ParseError.
TEST(ParseForm, FuzzNeverCrashes) {
  CounterRng rng(72);
  const std::string alphabet = "dx1y2t()+-*^/\\ .0123456789expq";
  int accepted = 0;
  for (int trial = 0; trial < 5000; ++trial) {
    std::string body;
    const auto len = rng.uniform(0, 24);
    for (int i = 0; i < len; ++i) body += alphabet[rng.uniform(0, static_cast<int>(alphabet.size()) - 1)];
    try {
      DiffForm f = parse(kTXY, body);
      ++accepted;
      EXPECT_EQ(parse_form({kTXY, print_form(f), f.degree()}), f) << body;
    } catch (const ParseError& e) {
      EXPECT_GE(e.column(), 1);
    } catch (const PoleError&) {
      ADD_FAILURE() << "pole error escaped: " << body;
    }
  }
  EXPECT_GT(accepted, 0);
}

TEST(ParseForm, DeepNestingIsRejected) {
  std::string body(5000, '(');
  EXPECT_THROW(parse(kXY, body + "x1" + std::string(5000, ')')), ParseError);
}

}  // namespace
}  // namespace exform
