#include "alexcert/pmembership.hpp"

#include <algorithm>
#include <numeric>

#include "json.hpp"

namespace alexcert {

ConditionStar condition_star(const HalfLaurent& delta_minus, int b1_minus) {
    if (b1_minus < 0) throw std::invalid_argument("b1_minus must be >= 0");
    ConditionStar r;
    r.c = delta_minus.coeff(b1_minus);
    r.holds = r.c <= 1;
    return r;
}

namespace {

PCertificate hopf_base() {
    PCertificate c;
    c.kind = PCertificate::Kind::HopfBase;
    return c;
}

}  // namespace

PCertificate certify_sum(PCertificate a, PCertificate b) {
    PCertificate c;
    c.kind = PCertificate::Kind::SumStep;
    c.children.push_back(std::make_unique<PCertificate>(std::move(a)));
    c.children.push_back(std::make_unique<PCertificate>(std::move(b)));
    return c;
}

PCertificate certify_braid(const PositiveBraidWord& w) {
    validate_word(w);
    if (w.strands < 2) throw NotInScopeError("one-strand closure is the unknot");
    if (!has_full_support(w))
        throw NotInScopeError("split word: missing generator in " + format_word(w));
    std::vector<PositiveBraidWord> factors = factor_single_occurrence(w);
    if (factors.empty())
        throw NotInScopeError("closure of " + format_word(w) + " is the unknot");
    if (factors.size() >= 2) {
        PCertificate acc = certify_braid(factors[0]);
        for (size_t i = 1; i < factors.size(); ++i)
            acc = certify_sum(std::move(acc), certify_braid(factors[i]));
        return acc;
    }
    const PositiveBraidWord& f = factors[0];
    if (!(f == w)) return certify_braid(f);
    if (betti_data(f).b1 == 1) return hopf_base();
    PositiveBraidWord sq = find_square_rewrite(f);
    int j = 0;
    while (sq.letters[j] != sq.letters[j + 1]) ++j;
    PCertificate c;
    c.kind = PCertificate::Kind::BraidStep;
    c.word = sq;
    c.square_at = j + 1;  // 1-based
    c.l_minus_word = word_with_letter_removed(word_with_letter_removed(sq, j), j);
    c.b1_minus = static_cast<int>(bricks(c.l_minus_word).size());
    c.children.push_back(
        std::make_unique<PCertificate>(certify_braid(word_with_letter_removed(sq, j))));
    return c;
}

PCertificate certify_tree(const PlaneTree& t) {
    if (t.size() == 0) throw std::invalid_argument("empty tree");
    if (t.size() == 1) return hopf_base();
    const int v = deepest_leftmost_leaf(t);
    PCertificate c;
    c.kind = PCertificate::Kind::TreeStep;
    c.tree = t;
    c.leaf = v;
    c.forest = forest_without_leaf_and_parent(t, v);
    c.b1_minus = 0;
    for (const auto& comp : c.forest) c.b1_minus += comp.size();
    c.children.push_back(std::make_unique<PCertificate>(certify_tree(remove_leaf(t, v))));
    return c;
}

namespace {

struct EvalResult {
    bool ok = true;
    HalfLaurent delta;
};

struct Verifier {
    VerificationReport& report;

    void fail(NodeRecord& rec, const std::string& message) {
        if (rec.ok) {
            rec.ok = false;
            rec.failure = message;
        }
        if (report.first_failure.empty())
            report.first_failure = rec.path + ": " + message;
    }

    EvalResult eval(const PCertificate& cert, const std::string& path) {
        NodeRecord rec;
        rec.path = path;
        EvalResult res;
        switch (cert.kind) {
            case PCertificate::Kind::HopfBase: {
                rec.kind = "hopf_base";
                res.delta = HalfLaurent::skein_factor();
                break;
            }
            case PCertificate::Kind::BraidStep: {
                rec.kind = "braid_step";
                rec.b1_minus = cert.b1_minus;
                res = eval_braid_step(cert, path, rec);
                break;
            }
            case PCertificate::Kind::TreeStep: {
                rec.kind = "tree_step";
                rec.b1_minus = cert.b1_minus;
                res = eval_tree_step(cert, path, rec);
                break;
            }
            case PCertificate::Kind::SumStep: {
                rec.kind = "sum_step";
                res = eval_sum_step(cert, path, rec);
                break;
            }
        }
        res.ok = res.ok && rec.ok;
        report.nodes.push_back(std::move(rec));
        return res;
    }

    // Shared skein/star/coefficient bookkeeping for the two step kinds.
    EvalResult check_step(const HalfLaurent& delta_plus, const HalfLaurent& delta_zero,
                          const HalfLaurent& delta_minus, int b1_minus, NodeRecord& rec) {
        EvalResult res;
        res.delta = delta_plus;
        if (delta_plus != delta_minus + HalfLaurent::skein_factor() * delta_zero) {
            fail(rec, "skein identity fails");
            res.ok = false;
            return res;
        }
        ConditionStar star = condition_star(delta_minus, b1_minus);
        rec.c = star.c;
        rec.has_c = true;
        if (!star.holds) {
            fail(rec, "condition (*) fails: c = " + std::to_string(star.c));
            res.ok = false;
            return res;
        }
        AlexSummary plus = summarize(delta_plus);
        AlexSummary zero = summarize(delta_zero);
        if (plus.is_zero || zero.is_zero) {
            fail(rec, "vanishing polynomial at a step node");
            res.ok = false;
            return res;
        }
        if (plus.degree_doubled != zero.degree_doubled + 1) {
            fail(rec, "degree does not drop by 1/2 along the step");
            res.ok = false;
            return res;
        }
        if (plus.alpha != zero.alpha) {
            fail(rec, "leading coefficients differ across the step");
            res.ok = false;
            return res;
        }
        if (plus.beta != star.c - zero.alpha + zero.beta) {
            fail(rec, "second-coefficient identity fails");
            res.ok = false;
            return res;
        }
        return res;
    }

    EvalResult eval_braid_step(const PCertificate& cert, const std::string& path,
                               NodeRecord& rec) {
        EvalResult bad;
        bad.ok = false;
        try {
            validate_word(cert.word);
        } catch (const std::exception& e) {
            fail(rec, e.what());
            return bad;
        }
        const int len = static_cast<int>(cert.word.letters.size());
        if (cert.children.size() != 1) {
            fail(rec, "braid step must have exactly one child");
            return bad;
        }
        if (cert.square_at < 1 || cert.square_at >= len ||
            cert.word.letters[cert.square_at - 1] != cert.word.letters[cert.square_at]) {
            fail(rec, "no square at the recorded position");
            return bad;
        }
        if (!has_full_support(cert.word)) {
            fail(rec, "step word lacks full support");
            return bad;
        }
        const int j = cert.square_at - 1;
        PositiveBraidWord l_zero = word_with_letter_removed(cert.word, j);
        PositiveBraidWord l_minus = word_with_letter_removed(l_zero, j);
        if (cert.b1_minus != static_cast<int>(bricks(l_minus).size())) {
            fail(rec, "stored b1_minus does not match the cut word's brick count");
            return bad;
        }
        EvalResult child = eval(*cert.children[0], path + ".0");
        if (!child.ok) {
            fail(rec, "child verification failed");
            return bad;
        }
        return check_step(braid_poly(cert.word), child.delta, braid_poly(l_minus),
                          cert.b1_minus, rec);
    }

    EvalResult eval_tree_step(const PCertificate& cert, const std::string& path,
                              NodeRecord& rec) {
        EvalResult bad;
        bad.ok = false;
        if (cert.children.size() != 1) {
            fail(rec, "tree step must have exactly one child");
            return bad;
        }
        if (cert.tree.size() < 2) {
            fail(rec, "tree step requires at least two vertices");
            return bad;
        }
        if (cert.leaf <= 0 || cert.leaf >= cert.tree.size() ||
            !cert.tree.nodes[cert.leaf].children.empty()) {
            fail(rec, "recorded vertex is not a non-root leaf");
            return bad;
        }
        std::vector<PlaneTree> expected = forest_without_leaf_and_parent(cert.tree, cert.leaf);
        if (expected != cert.forest) {
            fail(rec, "stored forest does not match the cut components");
            return bad;
        }
        int total = 0;
        for (const auto& comp : expected) total += comp.size();
        if (cert.b1_minus != total) {
            fail(rec, "stored b1_minus does not match the forest vertex count");
            return bad;
        }
        EvalResult child = eval(*cert.children[0], path + ".0");
        if (!child.ok) {
            fail(rec, "child verification failed");
            return bad;
        }
        HalfLaurent delta_minus = HalfLaurent::one();
        for (const auto& comp : expected) delta_minus = delta_minus * tree_poly(comp);
        return check_step(tree_poly(cert.tree), child.delta, delta_minus, cert.b1_minus, rec);
    }

    EvalResult eval_sum_step(const PCertificate& cert, const std::string& path,
                             NodeRecord& rec) {
        EvalResult bad;
        bad.ok = false;
        if (cert.children.size() != 2) {
            fail(rec, "sum step must have exactly two children");
            return bad;
        }
        EvalResult left = eval(*cert.children[0], path + ".0");
        EvalResult right = eval(*cert.children[1], path + ".1");
        if (!left.ok || !right.ok) {
            fail(rec, "child verification failed");
            return bad;
        }
        if (left.delta.is_zero() || right.delta.is_zero()) {
            fail(rec, "vanishing summand polynomial");
            return bad;
        }
        EvalResult res;
        res.delta = left.delta * right.delta;
        return res;
    }
};

}  // namespace

VerificationReport verify(const PCertificate& cert) {
    VerificationReport report;
    Verifier verifier{report};
    EvalResult root = verifier.eval(cert, "root");
    report.delta = root.delta;
    report.root = summarize(root.delta);
    report.valid = root.ok && !report.root.is_zero && report.root.alpha == 1 &&
                   report.root.beta <= -1;
    if (!report.valid && report.first_failure.empty())
        report.first_failure = "root: summary violates alpha = 1, beta <= -1";
    return report;
}

ItoReport ito_summand_check(const std::vector<ItoCase>& cases) {
    ItoReport report;
    for (const auto& item : cases) {
        ++report.cases;
        if (closure_components(item.word) != 1) {
            report.failures.push_back(format_word(item.word) + ": closure is not a knot");
            continue;
        }
        AlexSummary s = summarize(braid_poly(item.word));
        if (s.is_zero || -s.beta != item.prime_summands)
            report.failures.push_back(format_word(item.word) + ": -beta = " +
                                      std::to_string(-s.beta) + ", expected " +
                                      std::to_string(item.prime_summands));
    }
    return report;
}

namespace {

nlohmann::json cert_to_json_rec(const PCertificate& cert) {
    nlohmann::json j;
    switch (cert.kind) {
        case PCertificate::Kind::HopfBase:
            j["kind"] = "hopf_base";
            break;
        case PCertificate::Kind::BraidStep:
            j["kind"] = "braid_step";
            j["word"] = format_word(cert.word);
            j["square_at"] = cert.square_at;
            j["l_minus_b1"] = cert.b1_minus;
            j["child"] = cert_to_json_rec(*cert.children[0]);
            break;
        case PCertificate::Kind::TreeStep:
            j["kind"] = "tree_step";
            j["tree"] = format_tree(cert.tree);
            j["leaf"] = cert.leaf;
            j["forest"] = nlohmann::json::array();
            for (const auto& comp : cert.forest) j["forest"].push_back(format_tree(comp));
            j["l_minus_b1"] = cert.b1_minus;
            j["child"] = cert_to_json_rec(*cert.children[0]);
            break;
        case PCertificate::Kind::SumStep:
            j["kind"] = "sum_step";
            j["left"] = cert_to_json_rec(*cert.children[0]);
            j["right"] = cert_to_json_rec(*cert.children[1]);
            break;
    }
    return j;
}

PCertificate cert_from_json_rec(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw std::invalid_argument("certificate node must be an object with a 'kind'");
    const std::string kind = j.at("kind").get<std::string>();
    PCertificate cert;
    if (kind == "hopf_base") {
        cert.kind = PCertificate::Kind::HopfBase;
    } else if (kind == "braid_step") {
        cert.kind = PCertificate::Kind::BraidStep;
        cert.word = parse_word(j.at("word").get<std::string>());
        cert.square_at = j.at("square_at").get<int>();
        cert.b1_minus = j.at("l_minus_b1").get<int>();
        const int p = cert.square_at - 1;
        if (p >= 0 && p + 1 < static_cast<int>(cert.word.letters.size()))
            cert.l_minus_word =
                word_with_letter_removed(word_with_letter_removed(cert.word, p), p);
        cert.children.push_back(
            std::make_unique<PCertificate>(cert_from_json_rec(j.at("child"))));
    } else if (kind == "tree_step") {
        cert.kind = PCertificate::Kind::TreeStep;
        cert.tree = parse_tree(j.at("tree").get<std::string>());
        cert.leaf = j.at("leaf").get<int>();
        for (const auto& comp : j.at("forest"))
            cert.forest.push_back(parse_tree(comp.get<std::string>()));
        cert.b1_minus = j.at("l_minus_b1").get<int>();
        cert.children.push_back(
            std::make_unique<PCertificate>(cert_from_json_rec(j.at("child"))));
    } else if (kind == "sum_step") {
        cert.kind = PCertificate::Kind::SumStep;
        cert.children.push_back(
            std::make_unique<PCertificate>(cert_from_json_rec(j.at("left"))));
        cert.children.push_back(
            std::make_unique<PCertificate>(cert_from_json_rec(j.at("right"))));
    } else {
        throw std::invalid_argument("unknown certificate kind: " + kind);
    }
    return cert;
}

}  // namespace

std::string certificate_to_json(const PCertificate& cert) {
    return cert_to_json_rec(cert).dump(2);
}

PCertificate certificate_from_json(const std::string& json_text) {
    return cert_from_json_rec(nlohmann::json::parse(json_text));
}

}  // namespace alexcert
