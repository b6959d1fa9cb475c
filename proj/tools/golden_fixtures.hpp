#pragma once

// Expected canonical renderings of the worked small bases: the SJB of
// V(M(2,2,2)) and the Boolean SJBs O(1)..O(4). Term order inside a vector is
// point-code order; chains are grouped by start rank.

#include <array>
#include <string_view>

namespace sjb_cli {

struct GoldenFixture {
    std::string_view name;
    std::string_view expected;
};

inline constexpr std::string_view kGoldenM222 = R"(SJB M(2,2,2)
chain k=0 b=1
  (0,0)
  (1,0) + (0,1)
  (2,0) + 2(1,1) + (0,2)
  3(2,1) + 3(1,2)
  6(2,2)
chain k=1 b=1
  -2(1,0) + 2(0,1)
  -2(2,0) + 2(0,2)
  -2(2,1) + 2(1,2)
chain k=2 b=1
  2(2,0) - 2(1,1) + 2(0,2)
)";

inline constexpr std::string_view kGoldenB1 = R"(SJB B(1)
chain k=0 b=1
  {}
  {1}
)";

inline constexpr std::string_view kGoldenB2 = R"(SJB B(2)
chain k=0 b=1
  {}
  {1} + {2}
  2{1,2}
chain k=1 b=1
  -{1} + {2}
)";

inline constexpr std::string_view kGoldenB3 = R"(SJB B(3)
chain k=0 b=1
  {}
  {1} + {2} + {3}
  2{1,2} + 2{1,3} + 2{2,3}
  6{1,2,3}
chain k=1 b=1
  -{1} - {2} + 2{3}
  -2{1,2} + {1,3} + {2,3}
chain k=1 b=2
  -{1} + {2}
  -{1,3} + {2,3}
)";

inline constexpr std::string_view kGoldenB4 = R"(SJB B(4)
chain k=0 b=1
  {}
  {1} + {2} + {3} + {4}
  2{1,2} + 2{1,3} + 2{2,3} + 2{1,4} + 2{2,4} + 2{3,4}
  6{1,2,3} + 6{1,2,4} + 6{1,3,4} + 6{2,3,4}
  24{1,2,3,4}
chain k=1 b=1
  -{1} - {2} - {3} + 3{4}
  -2{1,2} - 2{1,3} - 2{2,3} + 2{1,4} + 2{2,4} + 2{3,4}
  -6{1,2,3} + 2{1,2,4} + 2{1,3,4} + 2{2,3,4}
chain k=1 b=2
  -{1} - {2} + 2{3}
  -2{1,2} + {1,3} + {2,3} - {1,4} - {2,4} + 2{3,4}
  -4{1,2,4} + 2{1,3,4} + 2{2,3,4}
chain k=1 b=3
  -{1} + {2}
  -{1,3} + {2,3} - {1,4} + {2,4}
  -2{1,3,4} + 2{2,3,4}
chain k=2 b=1
  2{1,2} - {1,3} - {2,3} - {1,4} - {2,4} + 2{3,4}
chain k=2 b=2
  {1,3} - {2,3} - {1,4} + {2,4}
)";

inline constexpr std::array<GoldenFixture, 5> kGoldenFixtures{{
    {"m222", kGoldenM222},
    {"b1", kGoldenB1},
    {"b2", kGoldenB2},
    {"b3", kGoldenB3},
    {"b4", kGoldenB4},
}};

} // namespace sjb_cli
