#include <gtest/gtest.h>

#include <string>

#include "uxagent/error.hpp"
#include "uxagent/level.hpp"

namespace uxagent {
namespace {

constexpr const char* kTiny =
    "labrecruits-level v1\n"
    "#####\n"
    "#SbD#\n"
    "#..G#\n"
    "#####\n"
    "button b1 2 1\n"
    "door d1 3 1\n"
    "goal chair 3 2\n"
    "link b1 -> d1\n";

std::size_t count_kind(const Level& level, ObjectKind kind, bool linked_only = false) {
  std::size_t n = 0;
  for (const auto& obj : level.objects()) {
    if (obj.kind == kind && (!linked_only || obj.linked)) ++n;
  }
  return n;
}

TEST(LevelParse, ReadsGridObjectsAndLinks) {
  const Level level = parse_level(kTiny);
  EXPECT_EQ(level.width(), 5);
  EXPECT_EQ(level.height(), 4);
  EXPECT_EQ(level.spawn(), (GridPos{1, 1}));
  EXPECT_EQ(level.cell({0, 0}), CellKind::Wall);
  EXPECT_EQ(level.cell({2, 2}), CellKind::Floor);
  ASSERT_EQ(level.objects().size(), 3u);
  EXPECT_TRUE(level.find("b1")->linked);
  EXPECT_EQ(level.linked_door("b1")->id, "d1");
  EXPECT_EQ(level.object_at({3, 2})->kind, ObjectKind::Goal);
  EXPECT_EQ(level.goal()->id, "chair");
  EXPECT_TRUE(validate(level).empty());
}

TEST(LevelParse, MinimalThreeByThree) {
  const Level level = parse_level("labrecruits-level v1\n.S.\n...\n.G.\ngoal g 1 2\n");
  EXPECT_EQ(level.width(), 3);
  EXPECT_EQ(level.height(), 3);
  EXPECT_TRUE(validate(level).empty());
}

TEST(LevelParse, CommentAndBlankLinesAfterGridAreSkipped) {
  const Level level =
      parse_level("labrecruits-level v1\n.S.\n.G.\n\n# the chair\ngoal g 1 1\n");
  EXPECT_EQ(level.goal()->pos, (GridPos{1, 1}));
}

TEST(LevelParse, WindowsLineEndings) {
  std::string text = kTiny;
  std::string crlf;
  for (char c : text) {
    if (c == '\n') crlf += '\r';
    crlf += c;
  }
  EXPECT_EQ(parse_level(crlf), parse_level(kTiny));
}

struct BadLevel {
  const char* text;
  int line;
  const char* fragment;
};

class LevelParseErrors : public ::testing::TestWithParam<BadLevel> {};

TEST_P(LevelParseErrors, ReportsLineAndReason) {
  const auto& bad = GetParam();
  try {
    parse_level(bad.text);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), bad.line) << e.what();
    EXPECT_NE(std::string(e.what()).find(bad.fragment), std::string::npos) << e.what();
    EXPECT_EQ(std::string(e.what()).rfind("line " + std::to_string(bad.line) + ":", 0), 0u);
  }
}

INSTANTIATE_TEST_SUITE_P(
    Cases, LevelParseErrors,
    ::testing::Values(
        BadLevel{"level v2\nS\n", 1, "missing header"},
        BadLevel{"labrecruits-level v1\n.S.\n..\n", 3, "width 2"},
        BadLevel{"labrecruits-level v1\n.S.\n.D.\ndoor d1 1 1\nlink b9 -> d1\n", 5,
                 "unknown button 'b9'"},
        BadLevel{"labrecruits-level v1\nSbD\nbutton b1 1 0\ndoor d1 2 0\nlink b1 -> d7\n", 5,
                 "unknown door 'd7'"},
        BadLevel{"labrecruits-level v1\nSb\nbutton b1 1 0\nbutton b1 1 0\n", 4, "duplicate"},
        BadLevel{"labrecruits-level v1\nS#\nbutton b1 1 0\n", 3, "wall cell"},
        BadLevel{"labrecruits-level v1\nS.\nbutton b1 1 0\n", 3, "grid has '.'"},
        BadLevel{"labrecruits-level v1\nSb\n", 2, "no object declaration"},
        BadLevel{"labrecruits-level v1\nS.\nlever l1 1 0\n", 3, "unknown directive"},
        BadLevel{"labrecruits-level v1\nSS\n", 2, "second spawn"},
        BadLevel{"labrecruits-level v1\nS.\nbutton b1 x 0\n", 3, "expected integer"}));

TEST(LevelParse, ColumnPointsAtOffendingToken) {
  try {
    parse_level("labrecruits-level v1\nSbD\nbutton b1 1 0\ndoor d1 2 0\nlink b1 -> d7\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 12);
  }
}

TEST(LevelValidate, GoalBehindWallsIsUnreachable) {
  const Level level = parse_level("labrecruits-level v1\nS#.\n.#G\ngoal g 2 1\n");
  const auto problems = validate(level);
  ASSERT_EQ(problems.size(), 1u);
  EXPECT_EQ(problems[0], "goal unreachable: g");
}

TEST(LevelValidate, DoorsCountAsOpenable) {
  const Level level = parse_level("labrecruits-level v1\nSD.G\ndoor d 1 0\ngoal g 3 0\n");
  EXPECT_TRUE(validate(level).empty());
}

TEST(LevelValidate, MultipleGoals) {
  const Level level = parse_level("labrecruits-level v1\nSGG\ngoal g1 1 0\ngoal g2 2 0\n");
  const auto problems = validate(level);
  ASSERT_EQ(problems.size(), 1u);
  EXPECT_EQ(problems[0], "multiple goals: g1, g2");
}

TEST(LevelValidate, DoorLinkedTwice) {
  const Level level = parse_level(
      "labrecruits-level v1\nSbbD\nbutton a 1 0\nbutton b 2 0\ndoor d 3 0\n"
      "link a -> d\nlink b -> d\n");
  const auto problems = validate(level);
  ASSERT_EQ(problems.size(), 1u);
  EXPECT_EQ(problems[0], "door d linked from multiple buttons: a, b");
}

TEST(LevelValidate, ProgrammaticLevelsAreChecked) {
  Grid<CellKind> cells(3, 1, CellKind::Floor);
  cells[{2, 0}] = CellKind::Wall;
  const Level level(cells, {2, 0}, {{"a", ObjectKind::Button, {1, 0}, false},
                                    {"a", ObjectKind::Door, {1, 0}, false}},
                    {});
  const auto problems = validate(level);
  EXPECT_EQ(problems.size(), 3u);
  EXPECT_EQ(problems[0], "spawn (2,0) is not on a floor cell");
}

TEST(LevelSerialize, RoundTripsEveryBuiltin) {
  for (MapId id : kAllMaps) {
    const Level& level = builtin(id);
    EXPECT_EQ(parse_level(serialize_level(level)), level) << to_string(id);
    EXPECT_EQ(serialize_level(parse_level(builtin_text(id))), serialize_level(level));
  }
}

TEST(LevelBuiltins, AreValidAndHaveExpectedObjects) {
  struct Expect {
    MapId id;
    std::size_t doors, linked, decoys;
  };
  for (const auto& e : {Expect{MapId::M1, 1, 1, 0}, Expect{MapId::M2, 1, 1, 6},
                        Expect{MapId::M3, 4, 4, 2}, Expect{MapId::M4, 28, 28, 0}}) {
    const Level& level = builtin(e.id);
    SCOPED_TRACE(std::string(to_string(e.id)));
    EXPECT_TRUE(validate(level).empty());
    EXPECT_EQ(count_kind(level, ObjectKind::Door), e.doors);
    EXPECT_EQ(count_kind(level, ObjectKind::Button, true), e.linked);
    EXPECT_EQ(count_kind(level, ObjectKind::Button) - e.linked, e.decoys);
    EXPECT_EQ(count_kind(level, ObjectKind::Goal), 1u);
    EXPECT_TRUE(goal_door(level).has_value());
  }
}

TEST(LevelBuiltins, MapIdsParseCaseInsensitively) {
  EXPECT_EQ(parse_map_id("m3"), MapId::M3);
  EXPECT_THROW(parse_map_id("M5"), Error);
}

TEST(LevelGoalDoor, FindsTheDoorSealingTheGoal) {
  EXPECT_EQ(goal_door(parse_level(kTiny)), "d1");
  EXPECT_EQ(goal_door(builtin(MapId::M3)), "d4");
  // Two ways into the goal room: no unique door.
  EXPECT_FALSE(goal_door(parse_level("labrecruits-level v1\nSD.\n.DG\ndoor a 1 0\ndoor b 1 1\n"
                                     "goal g 2 1\n"))
                   .has_value());
}

TEST(LevelWithoutGoal, DropsOnlyTheGoal) {
  const Level& m3 = builtin(MapId::M3);
  const Level stripped = without_goal(m3);
  EXPECT_EQ(stripped.goal(), nullptr);
  EXPECT_EQ(stripped.objects().size(), m3.objects().size() - 1);
  EXPECT_EQ(stripped.links(), m3.links());
  EXPECT_EQ(stripped.cells(), m3.cells());
}

}  // namespace
}  // namespace uxagent
