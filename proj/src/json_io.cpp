#include "klrd/json_io.hpp"

#include <utility>
#include <vector>

namespace klrd {

namespace {

std::string child(const std::string& ptr, const std::string& key) { return ptr + "/" + key; }
std::string child(const std::string& ptr, size_t index) {
    return ptr + "/" + std::to_string(index);
}

const Json& need(const Json& j, const char* key, const std::string& ptr) {
    if (!j.is_object()) throw JsonError(ptr, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw JsonError(child(ptr, key), "missing field");
    return *it;
}

int need_int(const Json& j, const std::string& ptr) {
    if (!j.is_number_integer()) throw JsonError(ptr, "expected an integer");
    return j.get<int>();
}

std::string need_str(const Json& j, const std::string& ptr) {
    if (!j.is_string()) throw JsonError(ptr, "expected a string");
    return j.get<std::string>();
}

const Json& need_array(const Json& j, const std::string& ptr) {
    if (!j.is_array()) throw JsonError(ptr, "expected an array");
    return j;
}

Vertex vertex_from(const Json& j, const std::string& ptr) {
    const std::string text = need_str(j, ptr);
    try {
        return Vertex::parse(text);
    } catch (const std::exception& e) {
        throw JsonError(ptr, std::string("bad vertex label: ") + e.what());
    }
}

Scalar scalar_from(const Json& j, const std::string& ptr) {
    const std::string text = need_str(j, ptr);
    try {
        return Scalar::parse(text);
    } catch (const std::exception& e) {
        throw JsonError(ptr, std::string("bad scalar: ") + e.what());
    }
}

std::vector<std::string> split_csv(const std::string& csv) {
    std::vector<std::string> out;
    size_t start = 0;
    while (start <= csv.size()) {
        size_t comma = csv.find(',', start);
        if (comma == std::string::npos) comma = csv.size();
        std::string part = csv.substr(start, comma - start);
        while (!part.empty() && part.front() == ' ') part.erase(part.begin());
        while (!part.empty() && part.back() == ' ') part.pop_back();
        if (!part.empty()) out.push_back(part);
        start = comma + 1;
    }
    return out;
}

}  // namespace

Json dimvec_to_json(const DimVec& nu) {
    Json j = Json::object();
    for (const auto& [i, n] : nu.mult) j[i.to_string()] = n;
    return j;
}

DimVec dimvec_from_json(const Json& j, const std::string& ptr) {
    if (!j.is_object()) throw JsonError(ptr, "expected an object of label -> count");
    std::map<Vertex, int> mult;
    for (const auto& [key, val] : j.items()) {
        Vertex i = [&] {
            try {
                return Vertex::parse(key);
            } catch (const std::exception& e) {
                throw JsonError(child(ptr, key), std::string("bad vertex label: ") + e.what());
            }
        }();
        int n = need_int(val, child(ptr, key));
        if (n <= 0) throw JsonError(child(ptr, key), "count must be positive");
        mult[i] = n;
    }
    for (const auto& [i, n] : mult) {
        auto it = mult.find(i.theta());
        if (it == mult.end() || it->second != n)
            throw JsonError(child(ptr, i.to_string()),
                            "not theta-symmetric: count differs at " + i.theta().to_string());
    }
    return DimVec(std::move(mult));
}

Json seq_to_json(const ThetaSeq& s) {
    Json j = Json::array();
    for (const Vertex& i : s.full()) j.push_back(i.to_string());
    return j;
}

ThetaSeq seq_from_json(const Json& j, const std::string& ptr) {
    need_array(j, ptr);
    if (j.size() % 2 != 0) throw JsonError(ptr, "sequence length must be even");
    std::vector<Vertex> full;
    full.reserve(j.size());
    for (size_t t = 0; t < j.size(); ++t) full.push_back(vertex_from(j[t], child(ptr, t)));
    const size_t m = full.size() / 2;
    for (size_t l = 0; l < m; ++l)
        if (full[m - 1 - l] != full[m + l].theta())
            throw JsonError(child(ptr, m - 1 - l),
                            "mirror condition fails: expected " + full[m + l].theta().to_string());
    return ThetaSeq(std::vector<Vertex>(full.begin() + static_cast<long>(m), full.end()));
}

Json matrix_to_json(const Matrix& A) {
    Json rows = Json::array();
    for (int r = 0; r < A.rows; ++r) {
        Json row = Json::array();
        for (int c = 0; c < A.cols; ++c) row.push_back(A.at(r, c).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const Json& j, const std::string& ptr) {
    need_array(j, ptr);
    const int rows = static_cast<int>(j.size());
    if (rows == 0) return Matrix(0, 0);
    const Json& first = j[0];
    need_array(first, child(ptr, size_t{0}));
    const int cols = static_cast<int>(first.size());
    Matrix A(rows, cols);
    for (int r = 0; r < rows; ++r) {
        const std::string rptr = child(ptr, static_cast<size_t>(r));
        need_array(j[r], rptr);
        if (static_cast<int>(j[r].size()) != cols) throw JsonError(rptr, "ragged matrix rows");
        for (int c = 0; c < cols; ++c)
            A.at(r, c) = scalar_from(j[r][c], child(rptr, static_cast<size_t>(c)));
    }
    return A;
}

Json module_to_json(const FDModule& M) {
    Json j;
    j["nu"] = dimvec_to_json(M.nu);
    Json blocks = Json::array();
    for (const auto& [s, d] : M.dim) {
        Json b;
        b["seq"] = seq_to_json(s);
        b["dim"] = d;
        blocks.push_back(std::move(b));
    }
    j["blocks"] = std::move(blocks);
    Json kappas = Json::array();
    for (const auto& [key, A] : M.kappa) {
        if (A.is_zero()) continue;
        Json e;
        e["l"] = key.first;
        e["seq"] = seq_to_json(key.second);
        e["rows"] = matrix_to_json(A);
        kappas.push_back(std::move(e));
    }
    j["kappa"] = std::move(kappas);
    Json sigmas = Json::array();
    for (const auto& [key, A] : M.sigma) {
        if (A.is_zero()) continue;
        Json e;
        e["k"] = key.first;
        e["seq"] = seq_to_json(key.second);
        e["rows"] = matrix_to_json(A);
        sigmas.push_back(std::move(e));
    }
    j["sigma"] = std::move(sigmas);
    if (M.m == 0) j["parts"] = Json::array({M.part_plus, M.part_minus});
    return j;
}

FDModule module_from_json(const Json& j) {
    FDModule M;
    M.nu = dimvec_from_json(need(j, "nu", ""), "/nu");
    M.m = M.nu.rank();
    if (M.m == 0) {
        if (j.contains("parts")) {
            const Json& parts = need_array(j["parts"], "/parts");
            if (parts.size() != 2) throw JsonError("/parts", "expected two multiplicities");
            M.part_plus = need_int(parts[0], "/parts/0");
            M.part_minus = need_int(parts[1], "/parts/1");
            if (M.part_plus < 0 || M.part_minus < 0)
                throw JsonError("/parts", "multiplicities must be nonnegative");
        }
        return M;
    }

    const Json& blocks = need_array(need(j, "blocks", ""), "/blocks");
    for (size_t t = 0; t < blocks.size(); ++t) {
        const std::string ptr = child("/blocks", t);
        ThetaSeq s = seq_from_json(need(blocks[t], "seq", ptr), child(ptr, "seq"));
        if (s.dimvec() != M.nu) throw JsonError(child(ptr, "seq"), "sequence does not lie in nu");
        int d = need_int(need(blocks[t], "dim", ptr), child(ptr, "dim"));
        if (d <= 0) throw JsonError(child(ptr, "dim"), "dimension must be positive");
        if (M.dim.count(s)) throw JsonError(child(ptr, "seq"), "duplicate block");
        M.dim[s] = d;
    }

    if (j.contains("kappa")) {
        const Json& kappas = need_array(j["kappa"], "/kappa");
        for (size_t t = 0; t < kappas.size(); ++t) {
            const std::string ptr = child("/kappa", t);
            int l = need_int(need(kappas[t], "l", ptr), child(ptr, "l"));
            if (l < 1 || l > M.m) throw JsonError(child(ptr, "l"), "index out of range");
            ThetaSeq s = seq_from_json(need(kappas[t], "seq", ptr), child(ptr, "seq"));
            const int d = M.block_dim(s);
            if (d == 0) throw JsonError(child(ptr, "seq"), "not a block of the module");
            Matrix A = matrix_from_json(need(kappas[t], "rows", ptr), child(ptr, "rows"));
            if (A.rows != d || A.cols != d)
                throw JsonError(child(ptr, "rows"), "shape must match the block dimension");
            if (M.kappa.count({l, s})) throw JsonError(ptr, "duplicate kappa entry");
            M.kappa[{l, s}] = std::move(A);
        }
    }

    if (j.contains("sigma")) {
        const Json& sigmas = need_array(j["sigma"], "/sigma");
        for (size_t t = 0; t < sigmas.size(); ++t) {
            const std::string ptr = child("/sigma", t);
            int k = need_int(need(sigmas[t], "k", ptr), child(ptr, "k"));
            if (k < 0 || k >= M.m) throw JsonError(child(ptr, "k"), "index out of range");
            ThetaSeq s = seq_from_json(need(sigmas[t], "seq", ptr), child(ptr, "seq"));
            const int d = M.block_dim(s);
            if (d == 0) throw JsonError(child(ptr, "seq"), "not a block of the module");
            const int dt = M.block_dim(seq_apply_s(k, s));
            Matrix A = matrix_from_json(need(sigmas[t], "rows", ptr), child(ptr, "rows"));
            if (A.rows != dt || A.cols != d)
                throw JsonError(child(ptr, "rows"),
                                "shape must map the block into its s_k image");
            if (M.sigma.count({k, s})) throw JsonError(ptr, "duplicate sigma entry");
            M.sigma[{k, s}] = std::move(A);
        }
    }
    return M;
}

Json hecke_to_json(const HeckeModule& H) {
    Json j;
    j["m"] = H.m;
    Json blocks = Json::array();
    for (const auto& [s, d] : H.blocks) {
        Json b;
        b["seq"] = seq_to_json(s);
        b["dim"] = d;
        blocks.push_back(std::move(b));
    }
    j["blocks"] = std::move(blocks);
    Json xs = Json::array();
    for (const Matrix& A : H.X) xs.push_back(matrix_to_json(A));
    j["X"] = std::move(xs);
    Json ts = Json::array();
    for (const Matrix& A : H.T) ts.push_back(matrix_to_json(A));
    j["T"] = std::move(ts);
    return j;
}

Json pbw_to_json(const PbwForm& form, Flavor f, WordStyle style) {
    Json j;
    j["word_table"] = word_style_name(style);
    j["in_algebra"] = form.in_algebra;
    Json terms = Json::array();
    for (const PbwEntry& e : form.entries) {
        Json t;
        t["w"] = e.w.to_string();
        Json word = Json::array();
        for (int letter : basis_word(e.w, f, style)) word.push_back(letter);
        t["word"] = std::move(word);
        t["source"] = seq_to_json(e.source);
        t["coeff"] = e.coeff.to_string();
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

KlrOp op_from_expr_json(const Json& j) {
    DimVec nu = dimvec_from_json(need(j, "nu", ""), "/nu");
    const int m = nu.rank();
    if (m == 0) throw JsonError("/nu", "rank must be positive");
    Flavor f = Flavor::TypeD;
    if (j.contains("type")) {
        const std::string t = need_str(j["type"], "/type");
        if (t == "B")
            f = Flavor::TypeB;
        else if (t != "D")
            throw JsonError("/type", "expected \"B\" or \"D\"");
    }
    const Json& prod = need_array(need(j, "product", ""), "/product");
    KlrOp acc = gen_idem_total(nu, f);
    for (size_t t = 0; t < prod.size(); ++t) {
        const std::string ptr = child("/product", t);
        const Json& item = prod[t];
        if (!item.is_object() || item.size() != 1)
            throw JsonError(ptr, "expected an object with one generator key");
        if (item.contains("idem")) {
            ThetaSeq s = seq_from_json(item["idem"], child(ptr, "idem"));
            if (s.dimvec() != nu) throw JsonError(child(ptr, "idem"), "sequence does not lie in nu");
            acc = acc * gen_idem(s, f);
        } else if (item.contains("kappa")) {
            int l = need_int(item["kappa"], child(ptr, "kappa"));
            if (l < 1 || l > m) throw JsonError(child(ptr, "kappa"), "index out of range");
            acc = acc * gen_kappa(l, nu, f);
        } else if (item.contains("sigma")) {
            int k = need_int(item["sigma"], child(ptr, "sigma"));
            if (k < 0 || k >= m || (k == 0 && m < 2))
                throw JsonError(child(ptr, "sigma"), "index out of range");
            acc = acc * gen_sigma(k, nu, f);
        } else if (item.contains("pi")) {
            if (f != Flavor::TypeB)
                throw JsonError(child(ptr, "pi"), "pi is a type B generator");
            if (need_int(item["pi"], child(ptr, "pi")) != 1)
                throw JsonError(child(ptr, "pi"), "only pi_1 exists");
            acc = acc * gen_pi1(nu);
        } else if (item.contains("scalar")) {
            acc = acc * scalar_from(item["scalar"], child(ptr, "scalar"));
        } else {
            throw JsonError(ptr, "unknown generator (want idem, kappa, sigma, pi or scalar)");
        }
    }
    return acc;
}

DimVec dimvec_from_labels(const std::string& csv) {
    std::map<Vertex, int> mult;
    for (const std::string& part : split_csv(csv)) ++mult[Vertex::parse(part)];
    for (const auto& [i, n] : mult) {
        auto it = mult.find(i.theta());
        if (it == mult.end() || it->second != n)
            throw std::invalid_argument("label multiset is not theta-symmetric at " +
                                        i.to_string());
    }
    return DimVec(std::move(mult));
}

ThetaSeq seq_from_labels(const std::string& csv) {
    Json arr = Json::array();
    for (const std::string& part : split_csv(csv)) arr.push_back(part);
    return seq_from_json(arr, "");
}

}  // namespace klrd
