#include "uxagent/level.hpp"

namespace uxagent {

namespace {

constexpr std::string_view kM1 = R"lvl(labrecruits-level v1
#####################
#S......#...#.....#.#
#######.#.#.#.###.#.#
#...#.#...#...#.#.#.#
#.#.#.#########.#.#.#
#.#.#...#.....#...#.#
#.#.#.###.###.#.###.#
#.#...#...#.#.#.#b..#
#.#####.###.#.#.#D#.#
#...#...#...#...#G#.#
###.#.#####.#######.#
#...#.#...........#.#
#.#.#.#.#########.#.#
#.#.#...#.......#...#
#.#########.#######.#
#...........#.....#.#
#.#.#####.###.#.###.#
#.#.#...#.#...#.#...#
#.#.#.#.###.###.#.###
#.#...#.......#.....#
#####################
button b1 17 7
door d1 17 8
goal chair 17 9
link b1 -> d1
)lvl";

constexpr std::string_view kM2 = R"lvl(labrecruits-level v1
#####################
#S......#...#b....#.#
#######.#.#.#.###.#.#
#..b#.#...#...#b#.#.#
#.#.#.#########.#.#.#
#.#.#...#.....#...#.#
#.#.#.###.###.#.###.#
#.#...#...#.#.#.#b..#
#.#####.###.#.#.#D#.#
#...#...#...#...#G#.#
###.#.#####.#######.#
#...#.#...........#.#
#.#.#.#.#########.#.#
#.#.#...#......b#...#
#.#########.#######.#
#...........#.....#b#
#.#.#####.###.#.###.#
#.#.#...#.#...#.#.b.#
#.#.#.#.###.###.#.###
#.#...#.......#.....#
#####################
button b1 17 7
door d1 17 8
goal chair 17 9
button x1 13 1
button x2 3 3
button x3 15 3
button x4 15 13
button x5 19 15
button x6 18 17
link b1 -> d1
)lvl";

constexpr std::string_view kM3 = R"lvl(labrecruits-level v1
##############################################
#S...#.........#.........#.......b.#.b..#....#
####.#.........#....b....#.........#....#..G.#
####.#.........D.........D.........D....D....#
####......b....#......b..#....b....#....#....#
##############################################
door d1 15 3
door d2 25 3
door d3 35 3
door d4 40 3
button b1 10 4
button b2 20 2
button b3 30 4
button b4 37 1
button x1 22 4
button x2 33 1
goal chair 43 2
link b1 -> d1
link b2 -> d2
link b3 -> d3
link b4 -> d4
)lvl";

constexpr std::string_view kM4 = R"lvl(labrecruits-level v1
##################
########.#########
#####...D...######
####.DDDbDDD.#####
####DbbbbbbbD#####
##.Dbbbb.bbbbD.###
##.Dbbb......D.###
##.Dbb.......D.###
#.Dbb...S.....D.##
##.Db........#####
##.Db........#####
##.Db.......bD.###
####Db......##..##
####.DDD.DD####..#
#####...D..#####G#
########.#########
##################
door d01 13 11
door d02 3 7
door d03 3 6
door d04 3 5
door d05 4 4
door d06 5 3
door d07 6 3
door d08 7 3
door d09 8 2
door d10 9 3
door d11 10 3
door d12 11 3
door d13 12 4
door d14 13 5
door d15 13 6
door d16 13 7
door d17 14 8
door d18 10 13
door d19 9 13
door d20 8 14
door d21 7 13
door d22 6 13
door d23 5 13
door d24 4 12
door d25 3 11
door d26 3 10
door d27 3 9
door d28 2 8
button b01 12 11
button b02 4 7
button b03 5 7
button b04 4 6
button b05 5 6
button b06 4 5
button b07 6 6
button b08 5 5
button b09 5 4
button b10 6 5
button b11 6 4
button b12 7 5
button b13 7 4
button b14 8 4
button b15 8 3
button b16 9 4
button b17 9 5
button b18 10 4
button b19 10 5
button b20 11 4
button b21 11 5
button b22 12 5
button b23 5 12
button b24 4 11
button b25 4 10
button b26 4 9
button b27 4 8
button b28 3 8
goal chair 16 14
link b01 -> d01
link b02 -> d02
link b03 -> d03
link b04 -> d04
link b05 -> d05
link b06 -> d06
link b07 -> d07
link b08 -> d08
link b09 -> d09
link b10 -> d10
link b11 -> d11
link b12 -> d12
link b13 -> d13
link b14 -> d14
link b15 -> d15
link b16 -> d16
link b17 -> d17
link b18 -> d18
link b19 -> d19
link b20 -> d20
link b21 -> d21
link b22 -> d22
link b23 -> d23
link b24 -> d24
link b25 -> d25
link b26 -> d26
link b27 -> d27
link b28 -> d28
)lvl";

}  // namespace

std::string_view builtin_text(MapId id) {
  switch (id) {
    case MapId::M1:
      return kM1;
    case MapId::M2:
      return kM2;
    case MapId::M3:
      return kM3;
    case MapId::M4:
      return kM4;
  }
  return {};
}

}  // namespace uxagent
