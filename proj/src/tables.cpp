#include "stubborn/tables.hpp"

namespace stubborn {

namespace {

constexpr MsdPolicy kAllow = MsdPolicy::AllowMsdZero;
constexpr MsdPolicy kNoZero = MsdPolicy::NoMsdZero;
constexpr ChangeCount kExactly2 = ChangeCount::exactly(2);
constexpr ChangeCount kAtMost2 = ChangeCount::at_most(2);

const std::vector<PublishedRow> kRows = {
    // table 1, "allowed" column
    {1, 2, "1010100", 84, kExactly2, kAllow},
    {1, 3, "1111", 40, kExactly2, kAllow},
    {1, 4, "20130000", 34560, kExactly2, kAllow},
    {1, 5, "4", 4, kExactly2, kAllow},
    {1, 10, "4", 4, kExactly2, kAllow},
    // table 1, "not allowed" column
    {1, 2, "1001", 9, kExactly2, kNoZero},
    {1, 3, "11", 4, kExactly2, kNoZero},
    {1, 4, "12321230", 28268, kExactly2, kNoZero},
    {1, 5, "4", 4, kExactly2, kNoZero},
    {1, 10, "4", 4, kExactly2, kNoZero},
    // table 2
    {2, 2, "1010100", 84, kAtMost2, kAllow},
    {2, 3, "2200100", 1953, kAtMost2, kAllow},
    {2, 4, "20130000", 34560, kAtMost2, kAllow},
    {2, 5, "3243003420", 7000485, kAtMost2, kAllow},
    {2, 6, "55111253530", 354748446, kAtMost2, kAllow},
    {2, 7, "5411665056000", 77478704205, kAtMost2, kAllow},
    {2, 8, "33254100107730", 1878528135128, kAtMost2, kAllow},
    {2, 9, "210324811482600", 48398467146642, kAtMost2, kAllow},
    {2, 10, "977731833235239280", 977731833235239280ull, kAtMost2, kAllow},
    // table 3
    {3, 2, "1010100", 84, kAtMost2, kNoZero},
    {3, 3, "2200100", 1953, kAtMost2, kNoZero},
    {3, 4, "12321230", 28268, kAtMost2, kNoZero},
    {3, 5, "324322330", 1401590, kAtMost2, kNoZero},
    {3, 6, "43040303150", 273241578, kAtMost2, kNoZero},
    {3, 7, "5411665056000", 77478704205, kAtMost2, kNoZero},
    {3, 8, "33254100107730", 1878528135128, kAtMost2, kNoZero},
    {3, 9, "210324811482600", 48398467146642, kAtMost2, kNoZero},
    {3, 10, "977731833235239280", 977731833235239280ull, kAtMost2, kNoZero},
};

}  // namespace

const std::vector<PublishedRow>& published_rows() { return kRows; }

std::vector<PublishedRow> rows_for_table(int which) {
  std::vector<PublishedRow> out;
  for (const auto& row : kRows)
    if (row.table == which) out.push_back(row);
  return out;
}

TableEntry to_table_entry(const PublishedRow& row) {
  return TableEntry{row.base, row.value, row.count, row.policy, true};
}

}  // namespace stubborn
