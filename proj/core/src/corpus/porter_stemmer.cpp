#include "emolex/corpus/porter_stemmer.hpp"

#include <array>
#include <utility>

namespace emolex::corpus {

namespace {

class Stemmer {
 public:
  explicit Stemmer(std::string_view word) : b_(word) {}

  std::string run() && {
    step1a();
    step1b();
    step1c();
    step2();
    step3();
    step4();
    step5a();
    step5b();
    return std::move(b_);
  }

 private:
  using Rule = std::pair<std::string_view, std::string_view>;

  bool consonant(std::size_t i) const {
    switch (b_[i]) {
      case 'a':
      case 'e':
      case 'i':
      case 'o':
      case 'u':
        return false;
      case 'y':
        return i == 0 ? true : !consonant(i - 1);
      default:
        return true;
    }
  }

  // Number of VC sequences in b_[0, len).
  int measure(std::size_t len) const {
    int m = 0;
    std::size_t i = 0;
    while (i < len && consonant(i)) ++i;
    while (i < len) {
      while (i < len && !consonant(i)) ++i;
      if (i >= len) break;
      while (i < len && consonant(i)) ++i;
      ++m;
    }
    return m;
  }

  bool vowel_in(std::size_t len) const {
    for (std::size_t i = 0; i < len; ++i) {
      if (!consonant(i)) return true;
    }
    return false;
  }

  bool double_consonant(std::size_t len) const {
    return len >= 2 && b_[len - 1] == b_[len - 2] && consonant(len - 1);
  }

  // *o: stem ends consonant-vowel-consonant, final consonant not w, x or y.
  bool cvc(std::size_t len) const {
    if (len < 3) return false;
    if (!consonant(len - 3) || consonant(len - 2) || !consonant(len - 1)) return false;
    const char c = b_[len - 1];
    return c != 'w' && c != 'x' && c != 'y';
  }

  bool ends(std::string_view suffix) const {
    return b_.size() >= suffix.size() &&
           std::string_view(b_).substr(b_.size() - suffix.size()) == suffix;
  }

  std::size_t stem_len(std::string_view suffix) const { return b_.size() - suffix.size(); }

  void replace(std::string_view suffix, std::string_view with) {
    b_.resize(stem_len(suffix));
    b_ += with;
  }

  // First rule whose suffix matches decides; it fires only when the stem
  // measure exceeds `min_measure`.
  template <std::size_t N>
  void apply(const std::array<Rule, N>& rules, int min_measure) {
    for (const auto& [suffix, with] : rules) {
      if (ends(suffix)) {
        if (measure(stem_len(suffix)) > min_measure) replace(suffix, with);
        return;
      }
    }
  }

  void step1a() {
    if (ends("sses")) {
      replace("sses", "ss");
    } else if (ends("ies")) {
      replace("ies", "i");
    } else if (ends("ss")) {
      // unchanged
    } else if (ends("s")) {
      replace("s", "");
    }
  }

  void step1b() {
    if (ends("eed")) {
      if (measure(stem_len("eed")) > 0) replace("eed", "ee");
      return;
    }
    std::string_view removed;
    if (ends("ed") && vowel_in(stem_len("ed"))) {
      removed = "ed";
    } else if (ends("ing") && vowel_in(stem_len("ing"))) {
      removed = "ing";
    } else {
      return;
    }
    replace(removed, "");

    if (ends("at")) {
      replace("at", "ate");
    } else if (ends("bl")) {
      replace("bl", "ble");
    } else if (ends("iz")) {
      replace("iz", "ize");
    } else if (double_consonant(b_.size())) {
      const char c = b_.back();
      if (c != 'l' && c != 's' && c != 'z') b_.pop_back();
    } else if (measure(b_.size()) == 1 && cvc(b_.size())) {
      b_ += 'e';
    }
  }

  void step1c() {
    if (ends("y") && vowel_in(stem_len("y"))) b_.back() = 'i';
  }

  void step2() {
    static constexpr std::array<Rule, 20> rules{{
        {"ational", "ate"}, {"tional", "tion"}, {"enci", "ence"},   {"anci", "ance"},
        {"izer", "ize"},    {"abli", "able"},   {"alli", "al"},     {"entli", "ent"},
        {"eli", "e"},       {"ousli", "ous"},   {"ization", "ize"}, {"ation", "ate"},
        {"ator", "ate"},    {"alism", "al"},    {"iveness", "ive"}, {"fulness", "ful"},
        {"ousness", "ous"}, {"aliti", "al"},    {"iviti", "ive"},   {"biliti", "ble"},
    }};
    apply(rules, 0);
  }

  void step3() {
    static constexpr std::array<Rule, 7> rules{{
        {"icate", "ic"},
        {"ative", ""},
        {"alize", "al"},
        {"iciti", "ic"},
        {"ical", "ic"},
        {"ful", ""},
        {"ness", ""},
    }};
    apply(rules, 0);
  }

  void step4() {
    static constexpr std::array<std::string_view, 18> suffixes{
        "al",   "ance", "ence", "er",  "ic", "able", "ible", "ant", "ement",
        "ment", "ent",  "ou",   "ism", "ate", "iti", "ous",  "ive", "ize",
    };
    // (m>1 and (*s or *t)) ION; checked separately because of the stem condition.
    if (ends("ion")) {
      const auto len = stem_len("ion");
      if (len > 0 && (b_[len - 1] == 's' || b_[len - 1] == 't') && measure(len) > 1) {
        b_.resize(len);
      }
      return;
    }
    for (const auto suffix : suffixes) {
      if (ends(suffix)) {
        if (measure(stem_len(suffix)) > 1) b_.resize(stem_len(suffix));
        return;
      }
    }
  }

  void step5a() {
    if (!ends("e")) return;
    const auto len = stem_len("e");
    const int m = measure(len);
    if (m > 1 || (m == 1 && !cvc(len))) b_.resize(len);
  }

  void step5b() {
    if (measure(b_.size()) > 1 && double_consonant(b_.size()) && b_.back() == 'l') b_.pop_back();
  }

  std::string b_;
};

}  // namespace

std::string porter_stem(std::string_view word) {
  if (word.empty()) return {};
  return Stemmer(word).run();
}

}  // namespace emolex::corpus
