#pragma once

#include <string>
#include <vector>

namespace tordeg {

// Words are strings of simple-reflection indices such as "121321" for s1 s2 s1 s3 s2 s1.
std::vector<int> parse_word(const std::string& word);
std::string word_string(const std::vector<int>& word);

bool is_reduced_word_of_longest(const std::vector<int>& word, int n);
// Throws NotReduced unless the word is a reduced expression of the longest element of S_n.
void require_reduced_word(const std::vector<int>& word, int n);

// Words reachable by swapping adjacent letters i, j with |i - j| >= 2, sorted.
std::vector<std::vector<int>> commutation_class(const std::vector<int>& word);

// All reduced expressions of the longest element, sorted.
std::vector<std::vector<int>> reduced_words_of_longest(int n);

// One sorted representative per commutation class, classes ordered by representative.
std::vector<std::vector<int>> commutation_class_representatives(int n);

}  // namespace tordeg
