#include "vote/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <optional>
#include <ostream>
#include <sstream>

#include "vote/json_io.hpp"

namespace vote {

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kDefect = 1;
constexpr int kInputError = 2;
constexpr int kInfeasible = 3;

struct InfeasibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

Shape parse_shape(const std::string& s) {
    std::vector<int> parts;
    for (const auto& tok : split(s, ',')) parts.push_back(std::stoi(tok));
    return Shape(std::move(parts));
}

Vec parse_weights(const std::string& s) {
    Vec out;
    for (const auto& tok : split(s, ',')) out.push_back(Rational::from_string(tok));
    return out;
}

void require_counts_if(bool flag, const Profile& p) {
    if (flag && !p.is_voter_counts())
        throw std::invalid_argument("profile is not a voter-count profile (nonnegative integers required)");
}

void print_scores(std::ostream& out, const Vec& scores) {
    for (std::size_t i = 0; i < scores.size(); ++i)
        out << "  c" << i + 1 << ": " << scores[i] << "\n";
}

// ---- tally ----------------------------------------------------------------

int cmd_tally(const std::string& profile_path, const std::string& weights_str, bool counts,
              bool as_json, std::ostream& out) {
    const Profile p = profile_from_json(load_json_file(profile_path));
    require_counts_if(counts, p);
    const WeightingVector w(p.shape(), parse_weights(weights_str));
    const Vec scores = tally(w, p);
    const OrdinalRanking ord = ordinal(scores);
    if (as_json) {
        out << json{{"scores", rational_vec_to_json(scores)},
                    {"ranking", ordinal_to_json(ord)},
                    {"ranking_str", ord.str()}}
                   .dump(2)
            << "\n";
    } else {
        out << "scores:\n";
        print_scores(out, scores);
        out << "ranking: " << ord.str() << "\n";
    }
    return kOk;
}

// ---- pairs ----------------------------------------------------------------

int cmd_pairs(const std::string& profile_path, const std::optional<std::string>& tau_str,
              std::optional<int> k_opt, bool counts, bool as_json, std::ostream& out) {
    const Profile p = profile_from_json(load_json_file(profile_path));
    require_counts_if(counts, p);
    const int n = p.shape().n();
    Vec pairs;
    if (p.shape().is_full_ranking()) {
        if (tau_str) throw std::invalid_argument("--tau applies only to partial (top-k) profiles");
        pairs = pairs_of_profile(p);
    } else {
        int k = 0;
        if (!p.shape().is_top_k(k))
            throw std::invalid_argument("pairs analysis needs a full-ranking or (1^k, n-k) profile");
        if (k_opt && *k_opt != k)
            throw std::invalid_argument("--k does not match the profile shape");
        if (!tau_str) throw std::invalid_argument("partial profiles require --tau");
        pairs = pairs_of_partial_profile(p, Rational::from_string(*tau_str));
    }
    const std::vector<long> cope = copeland_scores(pairs, n);
    const std::optional<int> winner = condorcet_winner(pairs, n);
    if (as_json) {
        json j{{"pairs", pairs_vec_to_json(pairs, n)},
               {"copeland", json(cope)},
               {"condorcet", winner ? json(*winner) : json(nullptr)}};
        out << j.dump(2) << "\n";
    } else {
        out << "pairs vector:\n";
        for (const auto& [i, j] : pair_list(n))
            out << "  " << i << ">" << j << ": " << pairs[pair_index(n, i, j)] << "\n";
        out << "copeland scores:\n";
        for (int i = 1; i <= n; ++i) out << "  c" << i << ": " << cope[static_cast<std::size_t>(i - 1)] << "\n";
        if (winner) out << "condorcet winner: c" << *winner << "\n";
        else out << "condorcet winner: none\n";
    }
    return kOk;
}

// ---- analyze-weights -------------------------------------------------------

int cmd_analyze_weights(std::optional<int> n_opt, const std::optional<std::string>& shape_str,
                        const std::vector<std::string>& weight_strs, bool as_json, std::ostream& out) {
    if (weight_strs.empty()) throw std::invalid_argument("analyze-weights: give at least one --weights");
    std::optional<Shape> shape;
    if (shape_str) shape = parse_shape(*shape_str);
    else if (n_opt) shape = Shape::full_ranking(*n_opt);
    else throw std::invalid_argument("analyze-weights: give --n or --shape");

    std::vector<Vec> lifts;
    std::vector<Vec> raw;
    for (const auto& s : weight_strs) {
        const WeightingVector w(*shape, parse_weights(s));
        raw.push_back(w.weights);
        lifts.push_back(lift_weights(w));
    }

    // equivalence classes over the lifts
    std::vector<int> cls(lifts.size(), -1);
    int next_class = 0;
    for (std::size_t i = 0; i < lifts.size(); ++i) {
        if (cls[i] >= 0) continue;
        cls[i] = next_class++;
        for (std::size_t j = i + 1; j < lifts.size(); ++j)
            if (cls[j] < 0 && equivalent(lifts[i], lifts[j])) cls[j] = cls[i];
    }
    std::vector<std::vector<int>> classes(static_cast<std::size_t>(next_class));
    for (std::size_t i = 0; i < lifts.size(); ++i)
        classes[static_cast<std::size_t>(cls[i])].push_back(static_cast<int>(i) + 1);

    // pairwise effective-space orthogonality via the scalar criterion on hats
    std::vector<std::pair<int, int>> orthogonal;
    for (std::size_t i = 0; i < lifts.size(); ++i)
        for (std::size_t j = i + 1; j < lifts.size(); ++j) {
            const Vec hi = sum_zero_part(lifts[i]), hj = sum_zero_part(lifts[j]);
            if (!is_zero_vec(hi) && !is_zero_vec(hj) && dot(hi, hj).is_zero())
                orthogonal.emplace_back(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
        }

    if (as_json) {
        json vecs = json::array();
        for (std::size_t i = 0; i < lifts.size(); ++i)
            vecs.push_back(json{{"weights", rational_vec_to_json(raw[i])},
                                {"lift", rational_vec_to_json(lifts[i])},
                                {"sum_zero_part", rational_vec_to_json(sum_zero_part(lifts[i]))},
                                {"reversal_symmetric", reversal_symmetric(lifts[i])}});
        json orth = json::array();
        for (const auto& [a, b] : orthogonal) orth.push_back(json::array({a, b}));
        out << json{{"vectors", std::move(vecs)},
                    {"equivalence_classes", json(classes)},
                    {"orthogonal_effective_spaces", std::move(orth)}}
                   .dump(2)
            << "\n";
    } else {
        for (std::size_t i = 0; i < lifts.size(); ++i) {
            out << "w" << i + 1 << ": lift [";
            for (std::size_t c = 0; c < lifts[i].size(); ++c) out << (c ? " " : "") << lifts[i][c];
            out << "]  reversal-symmetric: " << (reversal_symmetric(lifts[i]) ? "yes" : "no") << "\n";
        }
        out << "equivalence classes:\n";
        for (const auto& c : classes) {
            out << " ";
            for (int idx : c) out << " w" << idx;
            out << "\n";
        }
        out << "orthogonal effective spaces (scalar test on sum-zero parts):\n";
        if (orthogonal.empty()) out << "  none\n";
        for (const auto& [a, b] : orthogonal) out << "  w" << a << " ⊥ w" << b << "\n";
    }
    return kOk;
}

// ---- recoverable ------------------------------------------------------------

int cmd_recoverable(int n, bool full, std::optional<int> k_opt, const std::optional<std::string>& tau_str,
                    const std::vector<std::string>& weight_strs, bool as_json, std::ostream& out) {
    Shape shape = full ? Shape::full_ranking(n) : Shape::top_k(n, k_opt.value_or(0));
    Matrix m(0, 0);
    std::optional<Rational> tau;
    if (full) {
        m = pairs_matrix(n);
    } else {
        if (!k_opt || !tau_str) throw std::invalid_argument("recoverable: partial mode needs --k and --tau");
        tau = Rational::from_string(*tau_str);
        m = partial_pairs_matrix(n, *k_opt, *tau);
    }
    const Subspace space = recoverable_weight_space(shape, m);

    json memberships = json::array();
    std::vector<std::pair<Vec, bool>> checks;
    for (const auto& s : weight_strs) {
        const Vec w = parse_weights(s);
        if (w.size() != shape.num_parts())
            throw std::invalid_argument("recoverable: weight vector needs one entry per shape part");
        checks.emplace_back(w, space.contains(w));
        memberships.push_back(json{{"weights", rational_vec_to_json(w)}, {"recoverable", checks.back().second}});
    }

    if (as_json) {
        json j{{"mode", full ? "full" : "partial"},
               {"n", n},
               {"dimension", space.dim()},
               {"basis", matrix_to_json(space.basis())},
               {"memberships", std::move(memberships)}};
        if (!full) {
            j["k"] = *k_opt;
            j["tau"] = tau->str();
            j["b"] = rational_vec_to_json(borda_analogue(n, *k_opt).weights);
            j["b_tau"] = rational_vec_to_json(borda_analogue_tau(n, *k_opt, *tau).weights);
        }
        out << j.dump(2) << "\n";
    } else {
        out << "recoverable weighting vectors over shape " << shape.str() << ": dimension " << space.dim() << "\n";
        out << "basis:\n";
        for (std::size_t i = 0; i < space.dim(); ++i) {
            out << "  [";
            for (std::size_t c = 0; c < space.ambient(); ++c) out << (c ? " " : "") << space.basis()(i, c);
            out << "]\n";
        }
        if (!full) {
            out << "b     = [";
            const Vec b = borda_analogue(n, *k_opt).weights;
            for (std::size_t c = 0; c < b.size(); ++c) out << (c ? " " : "") << b[c];
            out << "]\nb_tau = [";
            const Vec bt = borda_analogue_tau(n, *k_opt, *tau).weights;
            for (std::size_t c = 0; c < bt.size(); ++c) out << (c ? " " : "") << bt[c];
            out << "]\n";
        }
        for (const auto& [w, member] : checks) {
            out << "membership [";
            for (std::size_t c = 0; c < w.size(); ++c) out << (c ? " " : "") << w[c];
            out << "]: " << (member ? "recoverable" : "not recoverable") << "\n";
        }
    }
    return kOk;
}

// ---- construct ---------------------------------------------------------------

int cmd_construct(const std::string& targets_path, bool integer, const std::optional<std::string>& out_path,
                  bool as_json, std::ostream& out) {
    const auto [shape, targets] = targets_from_json(load_json_file(targets_path));
    auto result = construct_profile(shape, targets);
    if (!result) throw InfeasibleError("targets are inconsistent: no profile satisfies all of them");

    Profile emitted = result->profile;
    json extra;
    if (integer) {
        const CountsResult counts = normalize_to_counts(emitted);
        emitted = counts.counts;
        extra = json{{"scale", counts.scale.str()}, {"shift", counts.shift.str()}};
    }
    const json profile_json = profile_to_json(emitted);
    if (out_path) save_json_file(*out_path, profile_json);

    if (as_json) {
        json j{{"profile", profile_json}, {"kernel_dimension", result->kernel.dim()}};
        if (integer) j["integer"] = extra;
        out << j.dump(2) << "\n";
    } else {
        out << "solved: kernel dimension " << result->kernel.dim() << "\n";
        if (integer)
            out << "normalized to voter counts (scale " << extra["scale"].get<std::string>() << ", shift "
                << extra["shift"].get<std::string>() << "); ordinal outcomes preserved, raw scores rescaled\n";
        if (out_path) out << "wrote " << *out_path << "\n";
        else out << profile_json.dump(2) << "\n";
    }
    return kOk;
}

int cmd_construct_approval(int n, const std::string& r_app_str, const std::string& r_pos_str,
                           const std::string& weights_str, bool integer,
                           const std::optional<std::string>& out_path, bool as_json, std::ostream& out) {
    const Vec r_app = parse_weights(r_app_str);
    const Vec r_pos = parse_weights(r_pos_str);
    const Vec w = parse_weights(weights_str);
    const ParadoxResult result = approval_positional_paradox(n, r_app, r_pos, w);

    std::vector<Profile> blocks = result.profile.blocks;
    json extra;
    if (integer) {
        const RapCountsResult counts = normalize_to_counts(result.profile);
        blocks = counts.blocks;
        extra = json{{"scale", counts.scale.str()}, {"shifts", rational_vec_to_json(counts.shifts)}};
    }
    const json rap_json = rap_to_json(RankedApprovalProfile(blocks));
    if (out_path) save_json_file(*out_path, rap_json);

    if (as_json) {
        json j{{"ranked_approval_profile", rap_json},
               {"two_target_block", result.two_target_block},
               {"r_app", rational_vec_to_json(r_app)},
               {"r_pos", rational_vec_to_json(r_pos)}};
        if (integer) j["integer"] = extra;
        out << j.dump(2) << "\n";
    } else {
        out << "constructed ranked approval profile (two-target block: p" << result.two_target_block << ")\n";
        out << "verified approval sum-zero outcome and positional outcome exactly\n";
        if (integer)
            out << "normalized to voter counts (shared scale " << extra["scale"].get<std::string>()
                << "); ordinal outcomes preserved\n";
        if (out_path) out << "wrote " << *out_path << "\n";
        else out << rap_json.dump(2) << "\n";
    }
    return kOk;
}

// ---- tabloids ----------------------------------------------------------------

int cmd_tabloids(const std::string& shape_str, bool as_json, std::ostream& out) {
    const Shape shape = parse_shape(shape_str);
    const TabloidSpace space(shape);
    if (as_json) {
        json arr = json::array();
        for (std::size_t i = 0; i < space.size(); ++i) arr.push_back(space[i].str());
        out << json{{"shape", json(shape.parts())}, {"tabloids", std::move(arr)}}.dump(2) << "\n";
    } else {
        for (std::size_t i = 0; i < space.size(); ++i) out << i << ": " << space[i].str() << "\n";
    }
    return kOk;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact positional voting, pairs analysis, and paradox construction"};
    app.require_subcommand(1);

    bool as_json = false;
    app.add_flag("--json", as_json, "emit JSON on stdout");

    // tally
    auto* tally_cmd = app.add_subcommand("tally", "tally a profile under a weighting vector");
    std::string tally_profile, tally_weights;
    bool tally_counts = false;
    tally_cmd->add_option("--profile", tally_profile, "profile JSON file")->required();
    tally_cmd->add_option("--weights", tally_weights, "comma-separated rational weights, one per row")->required();
    tally_cmd->add_flag("--counts", tally_counts, "require nonnegative integer voter counts");

    // pairs
    auto* pairs_cmd = app.add_subcommand("pairs", "head-to-head analysis of a profile");
    std::string pairs_profile;
    std::optional<std::string> pairs_tau;
    std::optional<int> pairs_k;
    bool pairs_counts = false;
    pairs_cmd->add_option("--profile", pairs_profile, "profile JSON file")->required();
    pairs_cmd->add_option("--tau", pairs_tau, "tie weight in [0,1] (partial profiles only)");
    pairs_cmd->add_option("--k", pairs_k, "expected k of a (1^k, n-k) profile (consistency check)");
    pairs_cmd->add_flag("--counts", pairs_counts, "require nonnegative integer voter counts");

    // analyze-weights
    auto* analyze_cmd = app.add_subcommand("analyze-weights", "equivalence, reversal symmetry, orthogonality");
    std::optional<int> analyze_n;
    std::optional<std::string> analyze_shape;
    std::vector<std::string> analyze_weights;
    analyze_cmd->add_option("--n", analyze_n, "number of candidates (full rankings)");
    analyze_cmd->add_option("--shape", analyze_shape, "comma-separated shape, e.g. 1,1,2");
    analyze_cmd->add_option("--weights", analyze_weights, "weighting vector (repeatable)")->required();

    // recoverable
    auto* rec_cmd = app.add_subcommand("recoverable", "weighting vectors recoverable from the pairs map");
    int rec_n = 0;
    bool rec_full = false;
    std::optional<int> rec_k;
    std::optional<std::string> rec_tau;
    std::vector<std::string> rec_weights;
    rec_cmd->add_option("--n", rec_n, "number of candidates")->required();
    rec_cmd->add_flag("--full", rec_full, "full-ranking pairs map");
    rec_cmd->add_option("--k", rec_k, "top-k partial rankings");
    rec_cmd->add_option("--tau", rec_tau, "tie weight in [0,1]");
    rec_cmd->add_option("--weights", rec_weights, "test membership of this vector (repeatable)");

    // construct [approval]
    auto* con_cmd = app.add_subcommand("construct", "build a profile with prescribed outcomes");
    std::string con_targets;
    bool con_integer = false;
    std::optional<std::string> con_out;
    con_cmd->add_option("--targets", con_targets, "targets JSON file");
    con_cmd->add_flag("--integer", con_integer, "normalize to nonnegative integer voter counts");
    con_cmd->add_option("--out", con_out, "write the profile JSON here");

    auto* app_cmd = con_cmd->add_subcommand("approval", "approval vs positional paradox profile");
    int app_n = 0;
    std::string app_rapp, app_rpos, app_w;
    app_cmd->add_option("--n", app_n, "number of candidates")->required();
    app_cmd->add_option("--r-app", app_rapp, "sum-zero approval outcome")->required();
    app_cmd->add_option("--r-pos", app_rpos, "sum-zero positional outcome")->required();
    app_cmd->add_option("--weights", app_w, "nontrivial sum-zero weighting vector")->required();

    // tabloids
    auto* tab_cmd = app.add_subcommand("tabloids", "dump the canonical tabloid enumeration");
    std::string tab_shape;
    tab_cmd->add_option("--shape", tab_shape, "comma-separated shape")->required();

    // lets --json (and construct's --integer/--out) appear after the subcommand
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();
    app_cmd->fallthrough();

    std::vector<const char*> argv;
    argv.push_back("votealg");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());

        if (tally_cmd->parsed())
            return cmd_tally(tally_profile, tally_weights, tally_counts, as_json, out);
        if (pairs_cmd->parsed())
            return cmd_pairs(pairs_profile, pairs_tau, pairs_k, pairs_counts, as_json, out);
        if (analyze_cmd->parsed())
            return cmd_analyze_weights(analyze_n, analyze_shape, analyze_weights, as_json, out);
        if (rec_cmd->parsed()) {
            if (rec_full == (rec_k.has_value() || rec_tau.has_value()))
                throw std::invalid_argument("recoverable: give either --full or both --k and --tau");
            return cmd_recoverable(rec_n, rec_full, rec_k, rec_tau, rec_weights, as_json, out);
        }
        if (con_cmd->parsed()) {
            if (app_cmd->parsed())
                return cmd_construct_approval(app_n, app_rapp, app_rpos, app_w, con_integer, con_out, as_json, out);
            if (con_targets.empty())
                throw std::invalid_argument("construct: give --targets FILE (or the approval subcommand)");
            return cmd_construct(con_targets, con_integer, con_out, as_json, out);
        }
        if (tab_cmd->parsed())
            return cmd_tabloids(tab_shape, as_json, out);
        throw std::logic_error("no subcommand dispatched");
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help() << "\n";
            return kOk;
        }
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const InfeasibleError& e) {
        err << "infeasible: " << e.what() << "\n";
        return kInfeasible;
    } catch (const nlohmann::json::exception& e) {
        err << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::invalid_argument& e) {
        err << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::domain_error& e) {
        err << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::out_of_range& e) {
        err << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::logic_error& e) {
        err << "internal defect: " << e.what() << "\n";
        return kDefect;
    } catch (const std::exception& e) {
        err << "input error: " << e.what() << "\n";
        return kInputError;
    }
}

} // namespace vote
