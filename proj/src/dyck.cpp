#include "qtcat/dyck.hpp"

#include <sstream>

#include "qtcat/errors.hpp"

namespace qtcat {

int dinv_score(int m, int p) {
  if (1 <= p && p <= m) return m + 1 - p;
  if (-m <= p && p <= 0) return m + p;
  return 0;
}

bool is_dyck_word(int m, const std::vector<int>& gamma) {
  if (m < 1 || gamma.empty() || gamma[0] != 0) return false;
  for (std::size_t i = 1; i < gamma.size(); ++i) {
    if (gamma[i] < 0 || gamma[i] > gamma[i - 1] + m) return false;
  }
  return true;
}

MDyckWord::MDyckWord(int m, std::vector<int> gamma) : m_(m), gamma_(std::move(gamma)) {
  if (m_ < 1) throw InvalidWord("slope parameter must be positive");
  if (!is_dyck_word(m_, gamma_)) {
    std::ostringstream msg;
    msg << "not a " << m_ << "-Dyck word:";
    for (int g : gamma_) msg << ' ' << g;
    throw InvalidWord(msg.str());
  }
}

std::string MDyckWord::text(bool compact) const {
  std::string s;
  bool digits = gamma_.size() >= 2;
  for (int g : gamma_) digits = digits && g <= 9;
  if (compact && digits) {
    for (std::size_t i = 1; i < gamma_.size(); ++i) s += static_cast<char>('0' + gamma_[i]);
    return s;
  }
  for (std::size_t i = 0; i < gamma_.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(gamma_[i]);
  }
  return s;
}

int area_of(const std::vector<int>& gamma) {
  int s = 0;
  for (int g : gamma) s += g;
  return s;
}

int dinv_of(int m, const std::vector<int>& gamma) {
  int s = 0;
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    for (std::size_t j = i + 1; j < gamma.size(); ++j) s += dinv_score(m, gamma[i] - gamma[j]);
  }
  return s;
}

int area(const MDyckWord& w) { return area_of(w.gamma()); }
int dinv(const MDyckWord& w) { return dinv_of(w.m(), w.gamma()); }

void for_each_gamma(int n, int m, const std::function<void(const std::vector<int>&)>& visit) {
  if (n < 1 || m < 1) throw InvalidWord("word length and slope must be positive");
  std::vector<int> gamma(n, 0);
  // Odometer over positions 1..n-1; each entry runs from 0 to previous + m.
  while (true) {
    visit(gamma);
    int i = n - 1;
    while (i >= 1 && gamma[i] == gamma[i - 1] + m) --i;
    if (i < 1) return;
    ++gamma[i];
    for (int j = i + 1; j < n; ++j) gamma[j] = 0;
  }
}

std::vector<MDyckWord> enumerate_words(int n, int m) {
  std::vector<MDyckWord> out;
  for_each_gamma(n, m, [&](const std::vector<int>& g) { out.emplace_back(m, g); });
  return out;
}

Polynomial genfun(int n, int m) {
  // Counts per (area, dinv) are accumulated in machine integers first.
  std::map<std::pair<int, int>, long> counts;
  for_each_gamma(n, m, [&](const std::vector<int>& g) { ++counts[{area_of(g), dinv_of(m, g)}]; });
  Polynomial p;
  for (const auto& [ad, c] : counts) {
    p.add_term(static_cast<std::uint32_t>(ad.first), static_cast<std::uint32_t>(ad.second), Integer(c));
  }
  return p;
}

MDyckWord parse_word(int m, const std::string& text) {
  std::vector<int> gamma;
  if (text.find(',') != std::string::npos) {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        gamma.push_back(std::stoi(item));
      } catch (const std::exception&) {
        throw InvalidWord("bad word entry '" + item + "'");
      }
    }
  } else {
    gamma.push_back(0);
    for (char c : text) {
      if (c < '0' || c > '9') throw InvalidWord("bad word '" + text + "'");
      gamma.push_back(c - '0');
    }
  }
  return MDyckWord(m, std::move(gamma));
}

}  // namespace qtcat
