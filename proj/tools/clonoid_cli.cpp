// Command-line front end: classify, generate, member, family, theta, hypergraph, verify, list-clones.
//
// Exit codes: 0 ok or true, 1 false (or a failed check), 2 usage or parse error,
// 3 indeterminate, 4 budget refusal.

#include "clonoid/engine.hpp"
#include "clonoid/families.hpp"
#include "clonoid/hypergraph.hpp"
#include "clonoid/suite.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

namespace {

using nlohmann::json;
using namespace clonoid;

enum Exit { kOk = 0, kFalse = 1, kUsage = 2, kIndeterminate = 3, kBudget = 4 };

struct CliConfig {
    unsigned arityCap = 16;
    std::uint64_t budget = kDefaultBudget;
    bool json = false;
    std::uint64_t seed = 0;

    nlohmann::json toJson() const {
        return {{"arityCap", arityCap}, {"budget", budget}, {"outputFormat", json ? "json" : "text"}, {"seed", seed}};
    }
    std::string comment() const {
        return "# config: arity-cap=" + std::to_string(arityCap) + " budget=" + std::to_string(budget) +
               " seed=" + std::to_string(seed) + "\n";
    }
};

void emit(const CliConfig& cfg, json body) {
    body["config"] = cfg.toJson();
    std::cout << body.dump(2) << '\n';
}

unsigned parseRank(const std::string& s) {
    if (s == "inf" || s == "infinity") return kRankInfinity;
    std::size_t pos = 0;
    const unsigned long k = std::stoul(s, &pos);
    if (pos != s.size() || k < 2) throw DomainError("rank must be an integer >= 2 or 'inf'");
    return static_cast<unsigned>(k);
}

const char* yesNo(bool b) { return b ? "yes" : "no"; }

int cmdClassify(const CliConfig& cfg, const std::string& literal) {
    const BooleanFunction f = parse(literal);
    const PropertyRecord r = classify(f);
    const auto& reg = Registry::standard();
    const auto& minimal = reg.get(r.minimalClone);
    if (cfg.json) {
        emit(cfg, {{"function", format(f)},
                   {"minimalClone", r.minimalClone},
                   {"minimalCloneName", minimal.name},
                   {"properties",
                    {{"t0", r.t0},
                     {"t1", r.t1},
                     {"monotone", r.monotone},
                     {"selfDual", r.selfDual},
                     {"affine", r.affine},
                     {"u2", r.u2},
                     {"u3", r.u3},
                     {"uInf", r.uInf},
                     {"w2", r.w2},
                     {"w3", r.w3},
                     {"wInf", r.wInf}}},
                   {"crossCheck", r.crossCheck}});
        return kOk;
    }
    std::cout << cfg.comment() << "function: " << format(f) << '\n'
              << "minimal clone: " << r.minimalClone << " (" << minimal.name << ")\n"
              << "preserves 0: " << yesNo(r.t0) << "\npreserves 1: " << yesNo(r.t1)
              << "\nmonotone: " << yesNo(r.monotone) << "\nself-dual: " << yesNo(r.selfDual)
              << "\naffine: " << yesNo(r.affine) << "\nU2 U3 Uinf: " << yesNo(r.u2) << ' ' << yesNo(r.u3) << ' '
              << yesNo(r.uInf) << "\nW2 W3 Winf: " << yesNo(r.w2) << ' ' << yesNo(r.w3) << ' ' << yesNo(r.wInf)
              << "\ncross-check: " << r.crossCheck << '\n';
    return kOk;
}

int cmdGenerate(const CliConfig& cfg, const std::string& genFile, const std::string& src, const std::string& tgt,
                unsigned m) {
    const Registry& reg = Registry::standard();
    GenerationRequest req;
    req.generators = FunctionSet::readFile(genFile);
    req.sourceClone = reg.get(src).id;
    req.targetClone = reg.get(tgt).id;
    req.outputArity = m;
    req.budget = cfg.budget;
    const std::uint64_t est = estimateCost(req, reg);
    if (est > cfg.budget) throw BudgetExceeded("generate", est, cfg.budget, "raise --budget or lower the arity");
    const FunctionSet out = generateClonoid(req, reg);
    if (cfg.json) {
        json members = json::array();
        for (const auto& f : out) members.push_back(format(f));
        emit(cfg, {{"sourceClone", src},
                   {"targetClone", tgt},
                   {"arity", m},
                   {"exact", out.isExact()},
                   {"estimatedCost", est},
                   {"size", out.size()},
                   {"members", members}});
        return kOk;
    }
    std::cout << cfg.comment() << "# arity " << m << " part of the (" << src << ", " << tgt
              << ")-clonoid generated by " << genFile << ": " << out.size() << " functions"
              << (out.isExact() ? "" : " (approximate left closure)") << '\n';
    out.write(std::cout);
    return kOk;
}

int cmdMember(const CliConfig& cfg, const std::string& literal, const std::string& genFile, const std::string& src,
              const std::string& tgt) {
    const Registry& reg = Registry::standard();
    const BooleanFunction f = parse(literal);
    const FunctionSet F = FunctionSet::readFile(genFile);
    const auto& C1 = reg.get(src);
    const auto& C2 = reg.get(tgt);
    GenerationRequest req;
    req.generators = F;
    req.sourceClone = C1.id;
    req.targetClone = C2.id;
    req.outputArity = f.arity();
    const std::uint64_t est = estimateCost(req, reg);
    if (est > cfg.budget) throw BudgetExceeded("member", est, cfg.budget, "raise --budget");
    const Verdict v = F.empty() ? Verdict::False : isClonoidMember(f, F, C1, C2, cfg.budget);
    if (cfg.json)
        emit(cfg, {{"function", format(f)}, {"sourceClone", src}, {"targetClone", tgt}, {"verdict", toString(v)}});
    else
        std::cout << toString(v) << '\n';
    return v == Verdict::True ? kOk : v == Verdict::False ? kFalse : kIndeterminate;
}

int printFunction(const CliConfig& cfg, const BooleanFunction& f, json extra) {
    if (cfg.json) {
        extra["function"] = format(f);
        emit(cfg, std::move(extra));
    } else {
        std::cout << format(f) << '\n';
    }
    return kOk;
}

int cmdHypergraph(const CliConfig& cfg, const std::string& literal, const std::string& rank, bool dot,
                  const std::string& dotPath, const std::string& target) {
    const BooleanFunction f = parse(literal);
    const unsigned k = parseRank(rank);
    const Hypergraph G = disjointnessHypergraph(f, k);
    if (!target.empty()) {
        const BooleanFunction g = parse(target);
        const Hypergraph H = disjointnessHypergraph(g, k);
        if (f[0] || g[0]) throw PreconditionError("both functions must satisfy f(0) = 0");
        const auto h = findHomomorphism(G, H);
        if (cfg.json) {
            json map = json::object();
            if (h)
                for (std::size_t i = 0; i < h->size(); ++i) map[G.vertices[i].toString()] = H.vertices[(*h)[i]].toString();
            emit(cfg, {{"f", format(f)}, {"g", format(g)}, {"k", rankName(k)}, {"minor", h.has_value()},
                       {"homomorphism", h ? map : json(nullptr)}});
        } else {
            std::cout << (h ? "true" : "false") << '\n';
            if (h)
                for (std::size_t i = 0; i < h->size(); ++i)
                    std::cout << G.vertices[i].toString() << " -> " << H.vertices[(*h)[i]].toString() << '\n';
        }
        return h ? kOk : kFalse;
    }
    if (dot) {
        if (dotPath.empty()) {
            std::cout << toDot(G, "G");
            return kOk;
        }
        std::ofstream out(dotPath);
        if (!(out << toDot(G, "G"))) throw DomainError("cannot write '" + dotPath + "'");
        return kOk;
    }
    if (cfg.json) {
        json vs = json::array(), es = json::array();
        for (const auto& v : G.vertices) vs.push_back(v.toString());
        for (const auto& e : G.edges) es.push_back(e);
        emit(cfg, {{"function", format(f)}, {"k", rankName(k)}, {"minimalEdgesOnly", G.minimalEdgesOnly()},
                   {"vertices", vs}, {"edges", es}});
        return kOk;
    }
    std::cout << cfg.comment() << "# G(" << format(f) << ", " << rankName(k) << "): " << G.vertices.size()
              << " vertices, " << G.edges.size() << (G.minimalEdgesOnly() ? " minimal" : "") << " edges\n";
    for (std::size_t i = 0; i < G.vertices.size(); ++i) std::cout << "v" << i << ' ' << G.vertices[i].toString() << '\n';
    for (const auto& e : G.edges) {
        std::cout << 'e';
        for (auto v : e) std::cout << " v" << v;
        std::cout << '\n';
    }
    return kOk;
}

int cmdVerify(const CliConfig& cfg, std::vector<std::string> ids, bool all, const std::vector<std::string>& fixtures,
              const std::vector<std::string>& params, bool timing) {
    SuiteConfig sc;
    sc.budget = cfg.budget;
    sc.seed = cfg.seed;
    sc.arityCap = cfg.arityCap;
    sc.timing = timing;
    for (const auto& fx : fixtures) {
        const auto eq = fx.find('=');
        if (eq == std::string::npos) throw DomainError("--fixture expects NAME=LITERAL");
        sc.fixtures[fx.substr(0, eq)] = parse(fx.substr(eq + 1));
    }
    for (const auto& p : params) {
        const auto eq = p.find('=');
        if (eq == std::string::npos) throw DomainError("--param expects KEY=VALUE");
        sc.params[p.substr(0, eq)] = json::parse(p.substr(eq + 1));
    }
    if (all) {
        ids.clear();
        for (const auto& c : checkCatalog()) ids.push_back(c.id);
    }
    if (ids.empty()) throw DomainError("verify needs check ids or --all");
    const SuiteReport rep = runChecks(ids, sc);
    if (cfg.json) {
        json body = rep.toJson();
        body["cli"] = cfg.toJson();
        std::cout << body.dump(2) << '\n';
    } else {
        std::cout << cfg.comment() << "# bounded verification, suite " << rep.suiteVersion << '\n';
        for (const auto& c : rep.checks) {
            std::cout << c.checkId << ' ' << toString(c.status);
            if (timing) std::cout << ' ' << static_cast<long long>(c.wallMs) << "ms";
            std::cout << '\n';
            if (!c.counterexample.is_null()) std::cout << "  counterexample: " << c.counterexample.dump() << '\n';
        }
        std::cout << "# pass " << rep.countStatus(CheckStatus::Pass) << ", fail " << rep.countStatus(CheckStatus::Fail)
                  << ", indeterminate " << rep.countStatus(CheckStatus::Indeterminate) << ", skipped-budget "
                  << rep.countStatus(CheckStatus::SkippedBudget) << '\n';
    }
    return rep.anyFail() ? kFalse : kOk;
}

int cmdListClones(const CliConfig& cfg) {
    const Registry& reg = Registry::standard();
    if (cfg.json) {
        json arr = json::array();
        for (const auto& c : reg.clones())
            arr.push_back({{"id", c.id}, {"name", c.name}, {"dual", c.dualId}, {"description", c.description}});
        emit(cfg, {{"clones", arr}});
        return kOk;
    }
    for (const auto& c : reg.clones()) std::cout << c.id << '\t' << c.name << '\t' << c.description << '\n';
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Clonoids of Boolean functions: generation, membership, families and bounded verification"};
    app.require_subcommand(1);
    app.fallthrough();
    CliConfig cfg;
    app.add_option("--arity-cap", cfg.arityCap, "Largest arity accepted")->check(CLI::PositiveNumber);
    app.add_option_function<double>(
           "--budget",
           [&](double v) {
               cfg.budget = v >= 1.8e19 ? UINT64_MAX : static_cast<std::uint64_t>(v);
           },
           "Largest estimated cost of a single job, e.g. 1e8")
        ->check(CLI::Range(1.0, 1e30));
    app.add_flag("--json", cfg.json, "Emit JSON");
    app.add_option("--seed", cfg.seed, "Seed for sampling checks");

    std::string literal, genFile, src, tgt, familyName, rank = "2", target, dotPath;
    unsigned arity = 1, n = 0;
    bool all = false, timing = false;
    std::vector<std::string> ids, fixtures, params;

    auto* classifyCmd = app.add_subcommand("classify", "Property record and minimal clone of a function");
    classifyCmd->add_option("function", literal, "Truth-table literal, e.g. 2:0110")->required();

    auto* generateCmd = app.add_subcommand("generate", "m-ary part of the (C1, C2)-clonoid generated by a file");
    generateCmd->add_option("generators", genFile, "Generator file, one literal per line")->required();
    generateCmd->add_option("--src", src, "Source clone C1")->required();
    generateCmd->add_option("--tgt", tgt, "Target clone C2")->required();
    generateCmd->add_option("-m,--arity", arity, "Output arity")->check(CLI::PositiveNumber);

    auto* memberCmd = app.add_subcommand("member", "Decide membership in a generated clonoid");
    memberCmd->add_option("function", literal, "Truth-table literal")->required();
    memberCmd->add_option("--gens", genFile, "Generator file")->required();
    memberCmd->add_option("--src", src, "Source clone C1")->required();
    memberCmd->add_option("--tgt", tgt, "Target clone C2")->required();

    auto* familyCmd = app.add_subcommand("family", "Print f_n or q_n");
    familyCmd->add_option("kind", familyName, "f or q")->required();
    familyCmd->add_option("n", n, "Arity (>= 3)")->required();

    auto* thetaCmd = app.add_subcommand("theta", "Print the meet of f_n (or q_n) over all g^S maps");
    thetaCmd->add_option("kind", familyName, "f or q")->required();
    thetaCmd->add_option("n", n, "Arity (>= 5)")->required();

    auto* hyperCmd = app.add_subcommand("hypergraph", "Disjointness hypergraph G(f, k), or a U_k minor test");
    hyperCmd->add_option("function,--fn", literal, "Truth-table literal with f(0) = 0")->required();
    hyperCmd->add_option("-k,--rank", rank, "2, 3, ... or inf");
    auto* dotOpt = hyperCmd->add_option("--dot", dotPath, "Graphviz output, to stdout or the given path")
                       ->expected(0, 1);
    hyperCmd->add_option("--minor-of", target, "Decide f as a U_k minor of this function");

    auto* verifyCmd = app.add_subcommand("verify", "Run verification checks");
    verifyCmd->add_option("checks", ids, "Check ids");
    verifyCmd->add_flag("--all", all, "Run the full catalog");
    verifyCmd->add_option("--fixture", fixtures, "Replace a fixture, NAME=LITERAL (f5, q5)");
    verifyCmd->add_option("--param", params, "Narrow a check, KEY=VALUE (e.g. m=5)");
    verifyCmd->add_flag("--timing", timing, "Include wall times");

    auto* listCmd = app.add_subcommand("list-clones", "List registry clone ids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        setArityCap(cfg.arityCap);
        if (*classifyCmd) return cmdClassify(cfg, literal);
        if (*generateCmd) return cmdGenerate(cfg, genFile, src, tgt, arity);
        if (*memberCmd) return cmdMember(cfg, literal, genFile, src, tgt);
        if (*familyCmd)
            return printFunction(cfg, family(parseFamilyKind(familyName), n), {{"family", familyName}, {"n", n}});
        if (*thetaCmd)
            return printFunction(cfg, buildTheta(parseFamilyKind(familyName), n),
                                 {{"theta", familyName}, {"n", n}});
        if (*hyperCmd) return cmdHypergraph(cfg, literal, rank, dotOpt->count() > 0, dotPath, target);
        if (*verifyCmd) return cmdVerify(cfg, ids, all, fixtures, params, timing);
        if (*listCmd) return cmdListClones(cfg);
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget refusal: " << e.what() << '\n';
        return kBudget;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
