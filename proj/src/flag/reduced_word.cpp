#include "tordeg/flag/reduced_word.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

#include "tordeg/errors.hpp"

namespace tordeg {

std::vector<int> parse_word(const std::string& word) {
  std::vector<int> out;
  for (char c : word) {
    if (c < '1' || c > '9') throw Error(ErrorKind::InvalidInput, "reduced word must consist of digits 1-9");
    out.push_back(c - '0');
  }
  return out;
}

std::string word_string(const std::vector<int>& word) {
  std::string s;
  for (int i : word) s += static_cast<char>('0' + i);
  return s;
}

bool is_reduced_word_of_longest(const std::vector<int>& word, int n) {
  if (static_cast<int>(word.size()) != n * (n - 1) / 2) return false;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i : word) {
    if (i < 1 || i >= n) return false;
    // Right multiplication by s_i swaps positions i-1, i; length grows iff they are in order.
    if (perm[i - 1] > perm[i]) return false;
    std::swap(perm[i - 1], perm[i]);
  }
  for (int i = 0; i < n; ++i)
    if (perm[i] != n - 1 - i) return false;
  return true;
}

void require_reduced_word(const std::vector<int>& word, int n) {
  if (!is_reduced_word_of_longest(word, n))
    throw Error(ErrorKind::NotReduced, "not a reduced word of the longest element of S_" + std::to_string(n) + ": " +
                                           word_string(word));
}

std::vector<std::vector<int>> commutation_class(const std::vector<int>& word) {
  std::set<std::vector<int>> seen{word};
  std::vector<std::vector<int>> stack{word};
  while (!stack.empty()) {
    auto w = stack.back();
    stack.pop_back();
    for (size_t i = 0; i + 1 < w.size(); ++i) {
      if (std::abs(w[i] - w[i + 1]) < 2) continue;
      auto v = w;
      std::swap(v[i], v[i + 1]);
      if (seen.insert(v).second) stack.push_back(v);
    }
  }
  return {seen.begin(), seen.end()};
}

namespace {

void extend(std::vector<int>& perm, std::vector<int>& word, size_t N, std::vector<std::vector<int>>& out) {
  if (word.size() == N) {
    out.push_back(word);
    return;
  }
  for (size_t i = 1; i < perm.size(); ++i) {
    if (perm[i - 1] > perm[i]) continue;
    std::swap(perm[i - 1], perm[i]);
    word.push_back(static_cast<int>(i));
    extend(perm, word, N, out);
    word.pop_back();
    std::swap(perm[i - 1], perm[i]);
  }
}

}  // namespace

std::vector<std::vector<int>> reduced_words_of_longest(int n) {
  if (n < 2 || n > 9) throw Error(ErrorKind::InvalidInput, "reduced words are supported for 2 <= n <= 9");
  std::vector<int> perm(n), word;
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  extend(perm, word, n * (n - 1) / 2, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> commutation_class_representatives(int n) {
  std::set<std::vector<int>> covered;
  std::vector<std::vector<int>> reps;
  for (const auto& w : reduced_words_of_longest(n)) {
    if (covered.count(w)) continue;
    reps.push_back(w);
    for (auto& v : commutation_class(w)) covered.insert(v);
  }
  return reps;
}

}  // namespace tordeg
