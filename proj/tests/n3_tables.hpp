// Literal n = 3 tables in display order: the level vectors g_Q^{m,l} and the
// eigenvectors f_Q^{m,l} with their squared norms.
#pragma once

#include <string>
#include <vector>

namespace n3 {

const std::vector<std::string> kStates3{"000", "001", "010", "011", "100", "101", "110", "111"};

struct Row {
  int m, ell;
  std::vector<int> second_row;
  std::vector<const char*> values;
  const char* norm;
};

const std::vector<Row> kG3{
    {0, 0, {}, {"1", "0", "0", "0", "0", "0", "0", "0"}, ""},
    {0, 1, {}, {"0", "1", "1", "0", "1", "0", "0", "0"}, ""},
    {1, 0, {3}, {"0", "1", "-1/2", "0", "-1/2", "0", "0", "0"}, ""},
    {1, 0, {2}, {"0", "0", "1", "0", "-1", "0", "0", "0"}, ""},
    {0, 2, {}, {"0", "0", "0", "1", "0", "1", "1", "0"}, ""},
    {1, 1, {3}, {"0", "0", "0", "1/2", "0", "1/2", "-1", "0"}, ""},
    {1, 1, {2}, {"0", "0", "0", "1", "0", "-1", "0", "0"}, ""},
    {0, 3, {}, {"0", "0", "0", "0", "0", "0", "0", "1"}, ""},
};

const std::vector<Row> kF3{
    {0, 0, {}, {"1", "1", "1", "1", "1", "1", "1", "1"}, "1"},
    {0, 1, {}, {"3", "1", "1", "-1", "1", "-1", "-1", "-3"}, "5"},
    {1, 0, {3}, {"0", "-2", "1", "-1", "1", "-1", "2", "0"}, "1"},
    {1, 0, {2}, {"0", "0", "-2", "-2", "2", "2", "0", "0"}, "4/3"},
    {0, 2, {}, {"3", "-3", "-3", "-3", "-3", "-3", "-3", "3"}, "9"},
    {1, 1, {3}, {"0", "-3", "3/2", "3/2", "3/2", "3/2", "-3", "0"}, "9/4"},
    {1, 1, {2}, {"0", "0", "-3", "3", "3", "-3", "0", "0"}, "3"},
    {0, 3, {}, {"1", "-3", "-3", "3", "-3", "3", "3", "-1"}, "5"},
};

}  // namespace n3
