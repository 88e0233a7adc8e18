#pragma once

#include "cstem/types.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cstem {

/// Bijection between tokens and indices in [0, V).
struct Vocabulary {
    std::vector<std::string> tokens;                // index -> token
    std::unordered_map<std::string, Index> index;   // token -> index

    Index size() const { return static_cast<Index>(tokens.size()); }

    /// Builds the index and rejects duplicate tokens.
    static Vocabulary from_tokens(std::vector<std::string> toks);
};

/// Sparse bag-of-words vector; counts is sorted by vocab index.
struct BowDocument {
    std::vector<std::pair<Index, long>> counts;
    long total = 0;  // sum of counts
};

struct Corpus {
    std::vector<BowDocument> docs;
    Vocabulary vocab;

    Index size() const { return static_cast<Index>(docs.size()); }
};

/// Word-embedding rows aligned to vocab indices.
struct EmbeddingInit {
    Mat matrix;            // V x W
    double coverage = 0;   // fraction of vocab found in the file
};

using TokenizedDocs = std::vector<std::vector<std::string>>;

/// The max_vocab most frequent tokens by corpus frequency, ties broken
/// lexicographically; index order is (frequency desc, token asc). Documents
/// with fewer than min_doc_tokens raw tokens cannot survive vectorization
/// and are excluded from the frequency counts.
Vocabulary build_vocabulary(const TokenizedDocs& docs, Index max_vocab, long min_doc_tokens);

/// Counts over in-vocab tokens only; out-of-vocab tokens silently dropped.
/// Returns nullopt when fewer than min_doc_tokens in-vocab tokens remain.
std::optional<BowDocument> vectorize(const std::vector<std::string>& tokens,
                                     const Vocabulary& vocab, long min_doc_tokens);

struct CorpusBuildResult {
    Corpus corpus;
    long rejected = 0;
};

CorpusBuildResult make_corpus(const TokenizedDocs& docs, Vocabulary vocab,
                              long min_doc_tokens);

/// Deterministic disjoint split under seed; both halves share the vocab and
/// keep their original relative document order.
std::pair<Corpus, Corpus> split(const Corpus& corpus, double test_fraction,
                                std::uint64_t seed);

/// Reads a word2vec/GloVe-style text file (token followed by `dim` reals per
/// line, optional "count dim" header auto-detected). Rows for tokens missing
/// from the file are drawn from a Gaussian matched to the found rows' pooled
/// mean and standard deviation (mean 0, std 0.1 when nothing was found).
EmbeddingInit load_pretrained_embeddings(const std::string& path, const Vocabulary& vocab,
                                         Index dim, std::uint64_t seed);

/// One document per line: whitespace-separated tokens, or JSON-lines with a
/// "tokens" array (detected from the first non-empty line).
TokenizedDocs read_tokenized_file(const std::string& path);

void write_vocabulary(const Vocabulary& vocab, const std::string& path);

void write_corpus_json(const Corpus& corpus, const std::string& path);
Corpus read_corpus_json(const std::string& path);

/// Dense count vector; counts divided by the document total when normalize.
Vec dense_counts(const BowDocument& doc, Index vocab_size, bool normalize = false);

}  // namespace cstem
