#pragma once

// m-Dyck words: gamma_0 = 0, entries nonnegative, gamma_i <= gamma_{i-1} + m.

#include <compare>
#include <functional>
#include <string>
#include <vector>

#include "qtcat/polynomial.hpp"

namespace qtcat {

// Pair score used by dinv: m+1-p on [1,m], m+p on [-m,0], zero elsewhere.
int dinv_score(int m, int p);

class MDyckWord {
 public:
  // Throws InvalidWord unless gamma is an m-Dyck word.
  MDyckWord(int m, std::vector<int> gamma);

  int n() const { return static_cast<int>(gamma_.size()); }
  int m() const { return m_; }
  const std::vector<int>& gamma() const { return gamma_; }
  int operator[](std::size_t i) const { return gamma_[i]; }

  // "0,2,4,6"; compact drops the leading zero and the commas ("246") when
  // every entry is a single digit.
  std::string text(bool compact = false) const;

  friend bool operator==(const MDyckWord&, const MDyckWord&) = default;
  friend auto operator<=>(const MDyckWord& a, const MDyckWord& b) {
    if (a.m_ != b.m_) return a.m_ <=> b.m_;
    return a.gamma_ <=> b.gamma_;
  }

 private:
  int m_;
  std::vector<int> gamma_;
};

bool is_dyck_word(int m, const std::vector<int>& gamma);

int area(const MDyckWord& w);
int dinv(const MDyckWord& w);
int area_of(const std::vector<int>& gamma);
int dinv_of(int m, const std::vector<int>& gamma);

// Visits every word of length n in lexicographic order without materializing
// the list.
void for_each_gamma(int n, int m, const std::function<void(const std::vector<int>&)>& visit);
std::vector<MDyckWord> enumerate_words(int n, int m);

// Sum of q^area t^dinv over all words of length n.
Polynomial genfun(int n, int m);

// Accepts either the comma form or the compact digit form.
MDyckWord parse_word(int m, const std::string& text);

}  // namespace qtcat
