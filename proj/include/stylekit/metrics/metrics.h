#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stylekit/core/types.h"

namespace stylekit::metrics {

using TokenSequence = std::vector<std::string>;

// Lowercases ASCII letters, splits on whitespace and emits every ASCII
// punctuation character as its own token.
TokenSequence Tokenize(std::string_view text);

// Clipped k-gram matches of candidate against reference, and the number of
// candidate k-grams.
struct NgramPrecision {
  int matched = 0;
  int total = 0;
};
NgramPrecision ModifiedPrecision(const TokenSequence& candidate,
                                 const TokenSequence& reference, int k);

// min(1, exp(1 - r/c)); 0 for an empty candidate.
double BrevityPenalty(std::size_t candidate_length, std::size_t reference_length);

// Sentence BLEU with uniform weights over k = 1..n. A k >= 2 precision with
// no matches is smoothed to 1/(total+1). Empty candidate scores 0. Throws
// PreconditionError unless 1 <= n <= 4.
double Bleu(const TokenSequence& candidate, const TokenSequence& reference, int n);

// F1 of clipped n-gram overlap. Empty reference scores 0 with a warning.
double RougeN(const TokenSequence& candidate, const TokenSequence& reference, int n);

std::size_t LcsLength(const TokenSequence& a, const TokenSequence& b);
// F1 from the longest common subsequence.
double RougeL(const TokenSequence& candidate, const TokenSequence& reference);

// Distinct n-grams across all responses over total n-gram occurrences; 0 when
// there are no n-grams.
double Distinct(const std::vector<TokenSequence>& responses, int n);

// (candidate, reference) texts. BLEU/ROUGE are per-pair means, Distinct is
// corpus-wide over candidates. Throws PreconditionError for no pairs.
MetricReport Report(const std::vector<std::pair<std::string, std::string>>& pairs);

}  // namespace stylekit::metrics
