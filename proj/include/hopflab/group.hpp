#pragma once

#include <string>
#include <vector>

namespace hopflab {

// A finite group as an explicit multiplication table.  table[i][j] is the
// index of g_i * g_j; associativity, identity and inverses are checked
// exhaustively at construction.
struct GroupTable {
  std::vector<std::string> elements;
  std::vector<std::vector<int>> table;
  int identity = 0;
  std::vector<int> inverse;

  static GroupTable from_table(std::vector<std::string> elements,
                               std::vector<std::vector<int>> table);

  // C2 C3 C4 C2xC2 C6 S3 D4 Q8; element orders are fixed and documented in the
  // README so that every derived matrix is reproducible.
  static GroupTable builtin(const std::string& name);
  static bool is_builtin(const std::string& name);
  static const std::vector<std::string>& builtin_names();

  std::size_t size() const { return elements.size(); }
  int mul(int a, int b) const { return table[a][b]; }
  int inv(int a) const { return inverse[a]; }
  bool abelian() const;
  GroupTable opposite() const;
};

}  // namespace hopflab
