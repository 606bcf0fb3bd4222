#include "rthopf/representation.hpp"

#include <json.hpp>

#include <stdexcept>

namespace rthopf {

namespace {

void check_dims(Eigen::Index dim, const QMatrix& m) {
    if (m.rows() != dim || m.cols() != dim)
        throw std::invalid_argument("representation: matrix dimension mismatch");
}

bool exactly_zero(const QMatrix& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (!m(i, j).is_zero()) return false;
        }
    }
    return true;
}

QMatrix matrix_from_json(const nlohmann::json& rows, Eigen::Index dim) {
    QMatrix m(static_cast<Eigen::Index>(rows.size()), dim);
    Eigen::Index i = 0;
    for (const auto& row : rows) {
        if (static_cast<Eigen::Index>(row.size()) != dim)
            throw std::invalid_argument("representation: ragged matrix in JSON");
        Eigen::Index j = 0;
        for (const auto& entry : row) {
            m(i, j++) = entry.is_string() ? Rat::parse(entry.get<std::string>())
                                          : Rat(entry.get<long>());
        }
        ++i;
    }
    if (m.rows() != dim) throw std::invalid_argument("representation: matrix is not square");
    return m;
}

} // namespace

EndoFamily EndoFamily::from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    EndoFamily f;
    f.dim = j.at("dim").get<Eigen::Index>();
    for (const auto& [key, rows] : j.at("gens").items()) {
        f.gens.emplace(Tree::parse(key), matrix_from_json(rows, f.dim));
    }
    return f;
}

WordFamily WordFamily::from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    WordFamily f;
    f.dim = j.at("dim").get<Eigen::Index>();
    for (const auto& [key, rows] : j.at("gens").items()) {
        f.gens.emplace(key, matrix_from_json(rows, f.dim));
    }
    return f;
}

CommutingCheck check_commuting(const EndoFamily& f) {
    for (const auto& [t, m] : f.gens) check_dims(f.dim, m);
    for (auto it = f.gens.begin(); it != f.gens.end(); ++it) {
        for (auto jt = std::next(it); jt != f.gens.end(); ++jt) {
            QMatrix c = it->second * jt->second - jt->second * it->second;
            if (!exactly_zero(c)) {
                return CommutingCheck{false, std::make_pair(it->first, jt->first), std::move(c)};
            }
        }
    }
    return CommutingCheck{true, std::nullopt, QMatrix()};
}

QVector act_polynomial(const EndoFamily& f, const HElem& x, const QVector& v) {
    if (v.rows() != f.dim) throw std::invalid_argument("act_polynomial: vector dimension mismatch");
    if (!check_commuting(f).commuting)
        throw std::invalid_argument("act_polynomial: family does not commute");
    QVector out = QVector::Zero(f.dim);
    for (const auto& [forest, c] : x.terms()) {
        QVector w = v;
        bool zero = false;
        for (const Tree& t : forest.trees()) {
            auto it = f.gens.find(t);
            if (it == f.gens.end()) { zero = true; break; } // unlisted trees act as zero
            w = it->second * w;
        }
        if (!zero) out += w * c;
    }
    return out;
}

QVector act_word(const WordFamily& w, std::span<const std::string> word, const QVector& v) {
    if (v.rows() != w.dim) throw std::invalid_argument("act_word: vector dimension mismatch");
    QVector out = v;
    for (std::size_t i = word.size(); i-- > 0;) {
        auto it = w.gens.find(word[i]);
        if (it == w.gens.end()) return QVector::Zero(w.dim);
        check_dims(w.dim, it->second);
        out = it->second * out;
    }
    return out;
}

bool is_module_morphism(const EndoFamily& f, const EndoFamily& fprime, const QMatrix& h) {
    if (h.cols() != f.dim || h.rows() != fprime.dim)
        throw std::invalid_argument("is_module_morphism: dimension mismatch");
    auto zero_f = [&](Eigen::Index d) { return QMatrix::Zero(d, d); };
    std::vector<Tree> support;
    for (const auto& [t, m] : f.gens) support.push_back(t);
    for (const auto& [t, m] : fprime.gens) support.push_back(t);
    for (const Tree& t : support) {
        auto it = f.gens.find(t);
        auto jt = fprime.gens.find(t);
        QMatrix ft = it == f.gens.end() ? QMatrix(zero_f(f.dim)) : it->second;
        QMatrix ftp = jt == fprime.gens.end() ? QMatrix(zero_f(fprime.dim)) : jt->second;
        if (!exactly_zero(h * ft - ftp * h)) return false;
    }
    return true;
}

} // namespace rthopf
