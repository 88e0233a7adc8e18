#include "cstem/corpus.hpp"

#include "cstem/rng.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

namespace cstem {

Vocabulary Vocabulary::from_tokens(std::vector<std::string> toks) {
    Vocabulary v;
    v.tokens = std::move(toks);
    v.index.reserve(v.tokens.size());
    for (Index i = 0; i < static_cast<Index>(v.tokens.size()); ++i) {
        const bool inserted = v.index.emplace(v.tokens[i], i).second;
        require(inserted, "E_DOMAIN", "duplicate vocabulary token: " + v.tokens[i]);
    }
    return v;
}

Vocabulary build_vocabulary(const TokenizedDocs& docs, Index max_vocab, long min_doc_tokens) {
    require(max_vocab >= 1, "E_CONFIG", "max_vocab must be >= 1");

    // std::map keeps tokens lexicographically ordered, which makes the
    // (count desc, token asc) tie rule a stable sort on count alone.
    std::map<std::string, long> freq;
    for (const auto& doc : docs) {
        if (static_cast<long>(doc.size()) < min_doc_tokens) continue;
        for (const auto& tok : doc) ++freq[tok];
    }
    require(!freq.empty(), "E_EMPTY_CORPUS", "no tokens to build a vocabulary from");

    std::vector<std::pair<std::string, long>> entries(freq.begin(), freq.end());
    std::stable_sort(entries.begin(), entries.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });
    if (static_cast<Index>(entries.size()) > max_vocab) entries.resize(max_vocab);

    std::vector<std::string> toks;
    toks.reserve(entries.size());
    for (auto& e : entries) toks.push_back(std::move(e.first));
    return Vocabulary::from_tokens(std::move(toks));
}

std::optional<BowDocument> vectorize(const std::vector<std::string>& tokens,
                                     const Vocabulary& vocab, long min_doc_tokens) {
    std::map<Index, long> counts;
    long total = 0;
    for (const auto& tok : tokens) {
        const auto it = vocab.index.find(tok);
        if (it == vocab.index.end()) continue;
        ++counts[it->second];
        ++total;
    }
    if (total < min_doc_tokens) return std::nullopt;

    BowDocument doc;
    doc.counts.assign(counts.begin(), counts.end());
    doc.total = total;
    return doc;
}

CorpusBuildResult make_corpus(const TokenizedDocs& docs, Vocabulary vocab,
                              long min_doc_tokens) {
    CorpusBuildResult out;
    out.corpus.vocab = std::move(vocab);
    for (const auto& toks : docs) {
        if (auto doc = vectorize(toks, out.corpus.vocab, min_doc_tokens))
            out.corpus.docs.push_back(std::move(*doc));
        else
            ++out.rejected;
    }
    require(!out.corpus.docs.empty(), "E_EMPTY_CORPUS",
            "every document was rejected by the min token filter");
    return out;
}

std::pair<Corpus, Corpus> split(const Corpus& corpus, double test_fraction,
                                std::uint64_t seed) {
    require(test_fraction > 0 && test_fraction < 1, "E_CONFIG",
            "test fraction must lie strictly between 0 and 1");
    const Index n = corpus.size();
    const auto n_test = static_cast<Index>(
        std::llround(test_fraction * static_cast<double>(n)));

    std::vector<Index> perm(n);
    std::iota(perm.begin(), perm.end(), Index{0});
    Rng rng(seed);
    rng.shuffle(perm);

    std::vector<bool> is_test(n, false);
    for (Index i = 0; i < n_test; ++i) is_test[perm[i]] = true;

    Corpus train, test;
    train.vocab = corpus.vocab;
    test.vocab = corpus.vocab;
    for (Index i = 0; i < n; ++i)
        (is_test[i] ? test : train).docs.push_back(corpus.docs[i]);
    return {std::move(train), std::move(test)};
}

namespace {

bool looks_like_header(const std::string& line) {
    std::istringstream is(line);
    long a = 0, b = 0;
    std::string rest;
    return (is >> a >> b) && !(is >> rest) && a > 0 && b > 0;
}

}  // namespace

EmbeddingInit load_pretrained_embeddings(const std::string& path, const Vocabulary& vocab,
                                         Index dim, std::uint64_t seed) {
    require(dim >= 1, "E_CONFIG", "embedding dimension must be >= 1");
    std::ifstream in(path);
    require(in.good(), "E_IO", "cannot open embedding file: " + path);

    const Index v_size = vocab.size();
    EmbeddingInit out;
    out.matrix = Mat::Zero(v_size, dim);
    std::vector<bool> found(v_size, false);
    Index n_found = 0;

    std::string line;
    long line_no = 0;
    bool first = true;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        if (first && looks_like_header(line)) {
            first = false;
            std::istringstream is(line);
            long count = 0, file_dim = 0;
            is >> count >> file_dim;
            require(file_dim == dim, "E_PARSE",
                    "embedding file header declares dimension " + std::to_string(file_dim) +
                        ", expected " + std::to_string(dim));
            continue;
        }
        first = false;

        std::istringstream is(line);
        std::string token;
        is >> token;
        Vec row(dim);
        for (Index j = 0; j < dim; ++j) {
            if (!(is >> row[j]))
                fail("E_PARSE", "embedding file line " + std::to_string(line_no) +
                                    ": expected " + std::to_string(dim) + " values");
        }
        double extra;
        require(!(is >> extra), "E_PARSE",
                "embedding file line " + std::to_string(line_no) + ": too many values");
        require(row.allFinite(), "E_PARSE",
                "embedding file line " + std::to_string(line_no) + ": non-finite value");

        const auto it = vocab.index.find(token);
        if (it == vocab.index.end()) continue;
        if (found[it->second]) continue;  // first occurrence wins
        found[it->second] = true;
        ++n_found;
        out.matrix.row(it->second) = row.transpose();
    }

    out.coverage = v_size > 0 ? static_cast<double>(n_found) / static_cast<double>(v_size) : 0.0;

    // Missing rows: Gaussian matched to the found entries' pooled moments so
    // distance scales stay commensurate.
    double mean = 0.0, std = 0.1;
    if (n_found > 0) {
        double sum = 0, sum_sq = 0;
        for (Index v = 0; v < v_size; ++v) {
            if (!found[v]) continue;
            sum += out.matrix.row(v).sum();
            sum_sq += out.matrix.row(v).squaredNorm();
        }
        const double n_entries = static_cast<double>(n_found) * static_cast<double>(dim);
        mean = sum / n_entries;
        const double var = sum_sq / n_entries - mean * mean;
        std = var > 0 ? std::sqrt(var) : 0.0;
    }

    Rng rng(seed);
    for (Index v = 0; v < v_size; ++v) {
        if (found[v]) continue;
        for (Index j = 0; j < dim; ++j) out.matrix(v, j) = mean + std * rng.normal();
    }
    return out;
}

TokenizedDocs read_tokenized_file(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), "E_IO", "cannot open corpus file: " + path);

    TokenizedDocs docs;
    std::string line;
    int mode = 0;  // 0 undecided, 1 plain text, 2 json-lines
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto start = line.find_first_not_of(" \t\r");
        if (mode == 0 && start != std::string::npos)
            mode = line[start] == '{' ? 2 : 1;

        std::vector<std::string> toks;
        if (mode == 2) {
            if (start == std::string::npos) continue;  // blank between records
            nlohmann::json j;
            try {
                j = nlohmann::json::parse(line);
            } catch (const nlohmann::json::exception& e) {
                fail("E_PARSE", "corpus line " + std::to_string(line_no) + ": " + e.what());
            }
            require(j.contains("tokens") && j["tokens"].is_array(), "E_PARSE",
                    "corpus line " + std::to_string(line_no) + ": missing \"tokens\" array");
            for (const auto& t : j["tokens"]) {
                require(t.is_string(), "E_PARSE",
                        "corpus line " + std::to_string(line_no) + ": token is not a string");
                toks.push_back(t.get<std::string>());
            }
        } else {
            std::istringstream is(line);
            std::string tok;
            while (is >> tok) toks.push_back(std::move(tok));
        }
        docs.push_back(std::move(toks));
    }
    return docs;
}

void write_vocabulary(const Vocabulary& vocab, const std::string& path) {
    std::ofstream out(path);
    require(out.good(), "E_IO", "cannot write vocabulary file: " + path);
    for (const auto& tok : vocab.tokens) out << tok << '\n';
    require(out.good(), "E_IO", "failed writing vocabulary file: " + path);
}

void write_corpus_json(const Corpus& corpus, const std::string& path) {
    nlohmann::json j;
    j["vocab"] = corpus.vocab.tokens;
    auto& docs = j["docs"] = nlohmann::json::array();
    for (const auto& doc : corpus.docs) {
        nlohmann::json d;
        auto& idx = d["idx"] = nlohmann::json::array();
        auto& cnt = d["cnt"] = nlohmann::json::array();
        for (const auto& [v, c] : doc.counts) {
            idx.push_back(v);
            cnt.push_back(c);
        }
        docs.push_back(std::move(d));
    }
    std::ofstream out(path);
    require(out.good(), "E_IO", "cannot write corpus file: " + path);
    out << j.dump() << '\n';
    require(out.good(), "E_IO", "failed writing corpus file: " + path);
}

Corpus read_corpus_json(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), "E_IO", "cannot open corpus file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        fail("E_PARSE", std::string("corpus file: ") + e.what());
    }
    require(j.contains("vocab") && j.contains("docs"), "E_PARSE",
            "corpus file missing \"vocab\" or \"docs\"");

    Corpus corpus;
    corpus.vocab = Vocabulary::from_tokens(j["vocab"].get<std::vector<std::string>>());
    const Index v_size = corpus.vocab.size();
    for (const auto& d : j["docs"]) {
        BowDocument doc;
        const auto& idx = d.at("idx");
        const auto& cnt = d.at("cnt");
        require(idx.size() == cnt.size(), "E_PARSE", "corpus doc: idx/cnt length mismatch");
        for (std::size_t i = 0; i < idx.size(); ++i) {
            const auto v = idx[i].get<Index>();
            const auto c = cnt[i].get<long>();
            require(v >= 0 && v < v_size, "E_PARSE", "corpus doc: vocab index out of range");
            require(c >= 1, "E_PARSE", "corpus doc: count must be >= 1");
            doc.counts.emplace_back(v, c);
            doc.total += c;
        }
        require(std::is_sorted(doc.counts.begin(), doc.counts.end()), "E_PARSE",
                "corpus doc: indices not sorted");
        corpus.docs.push_back(std::move(doc));
    }
    return corpus;
}

Vec dense_counts(const BowDocument& doc, Index vocab_size, bool normalize) {
    Vec x = Vec::Zero(vocab_size);
    for (const auto& [v, c] : doc.counts) {
        require(v >= 0 && v < vocab_size, "E_SHAPE", "document index exceeds vocabulary");
        x[v] = static_cast<Scalar>(c);
    }
    if (normalize && doc.total > 0) x /= static_cast<Scalar>(doc.total);
    return x;
}

}  // namespace cstem
