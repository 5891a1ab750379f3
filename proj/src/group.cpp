#include "hopflab/group.hpp"

#include <array>

#include "hopflab/errors.hpp"

namespace hopflab {

GroupTable GroupTable::from_table(std::vector<std::string> elements,
                                  std::vector<std::vector<int>> table) {
  const std::size_t n = elements.size();
  if (table.size() != n) throw Error("group table has wrong number of rows");
  for (const auto& row : table) {
    if (row.size() != n) throw Error("group table has a row of wrong length");
    for (int v : row)
      if (v < 0 || std::size_t(v) >= n) throw Error("group table entry out of range");
  }

  GroupTable g;
  g.elements = std::move(elements);
  g.table = std::move(table);

  int id = -1;
  for (std::size_t e = 0; e < n; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      ok = g.table[e][a] == int(a) && g.table[a][e] == int(a);
    if (ok) {
      id = int(e);
      break;
    }
  }
  if (id < 0) throw Error("group table has no identity element");
  g.identity = id;

  g.inverse.assign(n, -1);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b)
      if (g.table[a][b] == id && g.table[b][a] == id) {
        g.inverse[a] = int(b);
        break;
      }
    if (g.inverse[a] < 0)
      throw Error("group element '" + g.elements[a] + "' has no inverse");
  }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (g.table[g.table[a][b]][c] != g.table[a][g.table[b][c]])
          throw Error("group table is not associative at (" + g.elements[a] + "," +
                      g.elements[b] + "," + g.elements[c] + ")");
  return g;
}

bool GroupTable::abelian() const {
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = 0; b < size(); ++b)
      if (table[a][b] != table[b][a]) return false;
  return true;
}

GroupTable GroupTable::opposite() const {
  GroupTable g = *this;
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = 0; b < size(); ++b) g.table[a][b] = table[b][a];
  return g;
}

namespace {

GroupTable cyclic(int n, const std::string& sym) {
  std::vector<std::string> names;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    names.push_back(i == 0 ? "e" : (i == 1 ? sym : sym + std::to_string(i)));
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  }
  return GroupTable::from_table(std::move(names), std::move(t));
}

GroupTable klein_four() {
  // e, a, b, ab with a^2 = b^2 = e
  std::vector<std::string> names = {"e", "a", "b", "ab"};
  auto idx = [](int xa, int xb) { return xa + 2 * xb; };
  std::vector<std::vector<int>> t(4, std::vector<int>(4));
  for (int a1 = 0; a1 < 2; ++a1)
    for (int b1 = 0; b1 < 2; ++b1)
      for (int a2 = 0; a2 < 2; ++a2)
        for (int b2 = 0; b2 < 2; ++b2)
          t[idx(a1, b1)][idx(a2, b2)] = idx((a1 + a2) % 2, (b1 + b2) % 2);
  return GroupTable::from_table(std::move(names), std::move(t));
}

GroupTable symmetric_three() {
  // permutations of {1,2,3}; s*t applies t first.  Order:
  // e, (12), (13), (23), (123), (132) where (123) maps 1->2->3->1.
  const std::array<std::array<int, 3>, 6> perms = {{
      {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}}};
  std::vector<std::string> names = {"e", "(12)", "(13)", "(23)", "(123)", "(132)"};
  auto find = [&](const std::array<int, 3>& p) {
    for (int k = 0; k < 6; ++k)
      if (perms[k] == p) return k;
    return -1;
  };
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      std::array<int, 3> c{};
      for (int x = 0; x < 3; ++x) c[x] = perms[i][perms[j][x]];
      t[i][j] = find(c);
    }
  return GroupTable::from_table(std::move(names), std::move(t));
}

GroupTable dihedral_four() {
  // r^a s^b, order: e r r2 r3 s rs r2s r3s; s r = r^-1 s
  std::vector<std::string> names = {"e", "r", "r2", "r3", "s", "rs", "r2s", "r3s"};
  auto idx = [](int a, int b) { return b * 4 + a; };
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int a1 = 0; a1 < 4; ++a1)
    for (int b1 = 0; b1 < 2; ++b1)
      for (int a2 = 0; a2 < 4; ++a2)
        for (int b2 = 0; b2 < 2; ++b2) {
          int a = b1 ? (a1 - a2 + 4) % 4 : (a1 + a2) % 4;
          t[idx(a1, b1)][idx(a2, b2)] = idx(a, (b1 + b2) % 2);
        }
  return GroupTable::from_table(std::move(names), std::move(t));
}

GroupTable quaternion_eight() {
  // 1 -1 i -i j -j k -k
  std::vector<std::string> names = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  // represent x as (unit u in {1,i,j,k}, sign s); multiplication of units with sign
  auto unit = [](int x) { return x / 2; };
  auto sgn = [](int x) { return x % 2; };
  auto pack = [](int u, int s) { return u * 2 + s; };
  // units: 0=1 1=i 2=j 3=k with i*j=k, j*k=i, k*i=j, i*i=j*j=k*k=-1
  static const int umul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int usgn[4][4] = {
      {0, 0, 0, 0},   // 1*1=1,  1*i=i,  1*j=j,  1*k=k
      {0, 1, 0, 1},   // i*1=i,  i*i=-1, i*j=k,  i*k=-j
      {0, 1, 1, 0},   // j*1=j,  j*i=-k, j*j=-1, j*k=i
      {0, 0, 1, 1}};  // k*1=k,  k*i=j,  k*j=-i, k*k=-1
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      int u = umul[unit(x)][unit(y)];
      int s = (sgn(x) + sgn(y) + usgn[unit(x)][unit(y)]) % 2;
      t[x][y] = pack(u, s);
    }
  return GroupTable::from_table(std::move(names), std::move(t));
}

}  // namespace

const std::vector<std::string>& GroupTable::builtin_names() {
  static const std::vector<std::string> names = {"C2", "C3", "C4", "C2xC2",
                                                 "C6", "S3", "D4", "Q8"};
  return names;
}

bool GroupTable::is_builtin(const std::string& name) {
  for (const auto& n : builtin_names())
    if (n == name) return true;
  return false;
}

GroupTable GroupTable::builtin(const std::string& name) {
  if (name == "C2") return cyclic(2, "a");
  if (name == "C3") return cyclic(3, "a");
  if (name == "C4") return cyclic(4, "a");
  if (name == "C2xC2") return klein_four();
  if (name == "C6") return cyclic(6, "a");
  if (name == "S3") return symmetric_three();
  if (name == "D4") return dihedral_four();
  if (name == "Q8") return quaternion_eight();
  throw Error("unknown builtin group '" + name + "'");
}

}  // namespace hopflab
