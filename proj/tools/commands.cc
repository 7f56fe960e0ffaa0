#include "commands.hh"

#include <crystals/corpus.hh>
#include <crystals/fooling.hh>
#include <crystals/polymorphism.hh>

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>

using std::optional;
using std::string;
using std::vector;

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace crystals::cli
{
    using std::to_string;

    namespace
    {
        auto digest_of(const vector<string> & parts) -> string
        {
            string joined;
            for (auto & p : parts) {
                joined += p;
                joined.push_back('\0');
            }
            return fnv1a_digest(joined);
        }

        auto finish(const GlobalOptions & global, const Report & report, const optional<fs::path> & extra = std::nullopt)
            -> void
        {
            auto j = report.to_json();
            if (global.json_report)
                write_json_file(*global.json_report, j);
            if (extra)
                write_json_file(*extra, j);
        }

        /// Runs a command body, mapping library exceptions to the error exit status.
        template <typename F_>
        auto guarded(Streams s, F_ && body) -> int
        {
            try {
                return body();
            }
            catch (const Error & e) {
                s.err << "error: " << e.what() << "\n";
            }
            catch (const std::filesystem::filesystem_error & e) {
                s.err << "error: " << e.what() << "\n";
            }
            catch (const std::bad_alloc &) {
                s.err << "error: out of memory\n";
            }
            return exit_code::error;
        }
    }

    auto load_digraph(const string & source) -> Digraph
    {
        if (fs::exists(source))
            return digraph_from_json(read_json_file(source));
        if (auto g = parse_shorthand(source))
            return *g;
        throw FormatError("'" + source + "' is neither a digraph file nor a shorthand like K3 or C5");
    }

    auto cmd_realize(const GlobalOptions & global, const RealizeOptions & options, Streams s) -> int
    {
        return guarded(s, [&] {
            auto text = read_text_file(options.album);
            auto album = album_from_json(parse_json(text));
            Report report{"realize", digest_of({text}), global.seed};

            auto start = Clock::now();
            auto check = is_realistic(album);
            report.add("album is realistic", "realistic albums are exactly the albums of tensors", true,
                check.realistic, seconds_since(start));
            if (! check.realistic) {
                s.err << "album is not realistic: " << check.violation->to_string() << "\n";
                finish(global, report);
                return exit_code::negative;
            }

            start = Clock::now();
            auto realization = realize(album);
            report.add("realisation reproduces every picture", "the realised tensor has the given album", true,
                album_from_tensor(realization.tensor, album.p()) == album, seconds_since(start));
            start = Clock::now();
            report.add("trace replays to the same tensor", "the construction is recorded step by step", true,
                replay(realization.trace) == realization.tensor, seconds_since(start));

            write_json_file(options.output, tensor_to_json(realization.tensor));
            if (options.trace)
                write_json_file(*options.trace, trace_to_json(realization.trace));
            s.out << "realized tensor of shape " << realization.tensor.shape().to_string() << " in "
                  << realization.trace.steps.size() << " steps\n";
            finish(global, report);
            return report.all_pass() ? exit_code::success : exit_code::negative;
        });
    }

    auto cmd_crystal(const GlobalOptions & global, const CrystalOptions & options, Streams s) -> int
    {
        return guarded(s, [&] {
            if (options.matrix.has_value() == options.fooling.has_value())
                throw ArgumentError("give exactly one of --matrix and --fooling");

            string text = options.matrix ? read_text_file(*options.matrix) : "fooling:" + to_string(*options.fooling);
            auto m = options.matrix ? tensor_from_json(parse_json(text)) : fooling_matrix(*options.fooling);
            Report report{"crystal", digest_of({text, to_string(options.dimension)}), global.seed};

            auto start = Clock::now();
            auto c = mine_crystal(m, options.dimension);
            report.add("every two-dimensional picture equals the matrix", "balanced matrices have crystals in every "
                "dimension", true, verify_crystal(c, m), seconds_since(start));

            write_json_file(options.output, tensor_to_json(c));
            s.out << "mined crystal of shape " << c.shape().to_string() << "\n";
            finish(global, report);
            return report.all_pass() ? exit_code::success : exit_code::negative;
        });
    }

    auto cmd_verify_crystal(const GlobalOptions & global, const VerifyCrystalOptions & options, Streams s) -> int
    {
        return guarded(s, [&] {
            auto crystal_text = read_text_file(options.crystal);
            auto matrix_text = read_text_file(options.matrix);
            auto c = tensor_from_json(parse_json(crystal_text));
            auto m = tensor_from_json(parse_json(matrix_text));
            Report report{"verify-crystal", digest_of({crystal_text, matrix_text}), global.seed};

            auto start = Clock::now();
            bool ok = verify_crystal(c, m);
            report.add("every two-dimensional picture equals the matrix", "definition of a crystal", true, ok,
                seconds_since(start));
            s.out << (ok ? "crystal verified\n" : "not a crystal of this matrix\n");
            finish(global, report);
            return ok ? exit_code::success : exit_code::negative;
        });
    }

    auto cmd_aip(const GlobalOptions & global, const AipOptions & options, Streams s) -> int
    {
        return guarded(s, [&] {
            auto g = load_digraph(options.g);
            auto h = load_digraph(options.h);
            Report report{"aip", digest_of({digraph_to_json(g).dump(), digraph_to_json(h).dump(),
                                     to_string(options.level)}),
                global.seed};

            auto start = Clock::now();
            auto verdict = aip_level_k(g, h, options.level);
            double elapsed = seconds_since(start);
            if (verdict.yes()) {
                start = Clock::now();
                report.add("witness satisfies every constraint", "integer solution of the level-k system", true,
                    satisfies_constraints(g, h, verdict.system, verdict.witness), elapsed + seconds_since(start));
            }

            if (options.witness)
                write_json_file(*options.witness, aip_witness_to_json(verdict));
            s.out << (verdict.yes() ? "YES" : "NO") << " (" << verdict.system.variables.size() << " variables, "
                  << verdict.system.equations.rows << " equations)\n";
            finish(global, report);
            if (! report.all_pass())
                return exit_code::error;
            return verdict.yes() ? exit_code::success : exit_code::negative;
        });
    }

    auto cmd_fool(const GlobalOptions & global, const FoolOptions & options, Streams s) -> int
    {
        return guarded(s, [&] {
            int c = options.c, d = options.d, k = options.level;
            if (c < 3 || c > d)
                throw ArgumentError("need 3 <= c <= d, got c = " + to_string(c) + ", d = " + to_string(d));
            if (k < 2)
                throw ArgumentError("need level at least 2, got " + to_string(k));

            auto g = clique(d + 1);
            auto h = clique(c);
            auto estimate = estimate_variable_count(g, h, k);
            if (estimate > fool_variable_limit)
                throw CapacityError("the level-" + to_string(k) + " system for K" + to_string(d + 1) + " -> K"
                    + to_string(c) + " has " + to_string(estimate) + " variables, above the limit of "
                    + to_string(fool_variable_limit));

            Report report{"fool", digest_of({to_string(c), to_string(d), to_string(k)}), global.seed};
            auto suffix = "(K" + to_string(d + 1) + ", K" + to_string(c) + ")";

            auto start = Clock::now();
            auto verdict = aip_level_k(g, h, k);
            report.add("AIP^" + to_string(k) + suffix + " by direct solve", "loopless digraphs are accepted by "
                "every level against K_n for n >= 3", "YES", verdict.yes() ? "YES" : "NO", seconds_since(start));

            start = Clock::now();
            auto certificate = certify_fooling_witness(g, c, k);
            report.add("crystal witness certifies AIP^" + to_string(k) + suffix, "projections of an M-crystal give a "
                "homomorphism into the free structure", true, certificate.valid(), seconds_since(start));
            if (! certificate.valid())
                s.err << "witness check failed: " << certificate.failure << "\n";

            start = Clock::now();
            auto colouring = brute_homomorphism(g, clique(d), 1e11);
            report.add("K" + to_string(d + 1) + " -> K" + to_string(d) + " exists", "no proper d-colouring of "
                "K_{d+1}", false, colouring.has_value(), seconds_since(start));

            for (auto & claim : report.claims())
                s.out << (claim.pass ? "pass  " : "FAIL  ") << claim.name << ": " << claim.observed.dump() << "\n";
            finish(global, report, options.report);
            return report.all_pass() ? exit_code::success : exit_code::negative;
        });
    }

    auto cmd_polymorphism(const GlobalOptions & global, const PolymorphismOptions & options, Streams s) -> int
    {
        return guarded(s, [&] {
            int arity = options.arity;
            optional<FunctionTable> f;
            bool alternating = false, polymorphism = false;
            if (options.check == "parity") {
                f = parity_function(arity);
                alternating = polymorphism = true;
            }
            else if (options.check == "constant") {
                f = constant_function(2, arity, 0);
                alternating = true;
            }
            else if (options.check == "first") {
                f = first_coordinate_function(2, arity);
                polymorphism = true;
            }
            else
                throw ArgumentError("unknown check '" + options.check + "'; use parity, constant or first");

            Report report{"polymorphism", digest_of({options.check, to_string(arity)}), global.seed};
            auto k2 = clique(2);
            auto start = Clock::now();
            report.add(options.check + " is alternating", "invariance under parity-preserving permutations and "
                "cancellation of a repeated trailing pair", alternating, is_alternating(*f), seconds_since(start));
            start = Clock::now();
            report.add(options.check + " is a polymorphism of K2", "maps every L-tuple of edges of K2 to an edge",
                polymorphism, is_polymorphism(*f, k2), seconds_since(start));

            for (auto & claim : report.claims())
                s.out << (claim.pass ? "pass  " : "FAIL  ") << claim.name << ": " << claim.observed.dump() << "\n";
            finish(global, report);
            return report.all_pass() ? exit_code::success : exit_code::negative;
        });
    }

    auto cmd_corpus(const GlobalOptions & global, const CorpusOptions & options, Streams s) -> int
    {
        return guarded(s, [&] {
            Report report{"corpus", digest_of({to_string(global.seed), options.output.generic_string()}), global.seed};
            auto start = Clock::now();
            auto corpus = generate_corpus(global.seed);
            auto written = write_corpus(corpus, options.output);

            bool realistic = std::all_of(corpus.albums.begin(), corpus.albums.end(),
                [](const Album & a) { return is_realistic(a).realistic; });
            bool balanced = std::all_of(corpus.balanced_matrices.begin(), corpus.balanced_matrices.end(),
                [](const IntTensor & m) { return apply_projection(m, {1}) == apply_projection(m, {2}); });
            double elapsed = seconds_since(start);
            report.add("every album is realistic", "albums of tensors are realistic", true, realistic, elapsed);
            report.add("every matrix is balanced", "row sums equal column sums", true, balanced, elapsed);

            s.out << "wrote " << written.size() << " files to " << options.output.string() << "\n";
            finish(global, report);
            return report.all_pass() ? exit_code::success : exit_code::negative;
        });
    }

    auto run(int argc, const char * const * argv, std::ostream & out, std::ostream & err) -> int
    {
        CLI::App app{"Exact integer tensors, crystals and affine integer programming certificates", "crystals"};
        app.require_subcommand(1);
        app.set_version_flag("--version", tool_version);

        GlobalOptions global;
        string report_path;
        app.add_option("--seed", global.seed, "Seed for every random choice")->capture_default_str();
        app.add_option("--json-report", report_path, "Write a JSON claim report here");
        app.add_flag("--quiet", global.quiet, "Suppress progress output");
        app.fallthrough();

        RealizeOptions realize_options;
        auto realize_cmd = app.add_subcommand("realize", "Realise a realistic album as a tensor");
        realize_cmd->add_option("--album", realize_options.album, "Album JSON file")->required();
        realize_cmd->add_option("--out", realize_options.output, "Output tensor JSON file")->required();
        realize_cmd->add_option("--trace", realize_options.trace, "Also write the construction trace");

        CrystalOptions crystal_options;
        auto crystal_cmd = app.add_subcommand("crystal", "Mine a crystal of a balanced square matrix");
        crystal_cmd->add_option("--matrix", crystal_options.matrix, "Matrix JSON file");
        crystal_cmd->add_option("--fooling", crystal_options.fooling, "Use the n x n fooling matrix instead");
        crystal_cmd->add_option("--dim", crystal_options.dimension, "Crystal dimension q >= 2")->required();
        crystal_cmd->add_option("--out", crystal_options.output, "Output tensor JSON file")->required();

        VerifyCrystalOptions verify_options;
        auto verify_cmd = app.add_subcommand("verify-crystal", "Check that every 2D picture equals a matrix");
        verify_cmd->add_option("--tensor,--crystal", verify_options.crystal, "Crystal JSON file")->required();
        verify_cmd->add_option("--matrix", verify_options.matrix, "Matrix JSON file")->required();

        AipOptions aip_options;
        auto aip_cmd = app.add_subcommand("aip", "Decide level k of the affine integer programming hierarchy");
        aip_cmd->set_help_flag("--help", "Print this help message and exit");
        aip_cmd->add_option("--g", aip_options.g, "Instance digraph: JSON file or shorthand such as C5")->required();
        aip_cmd->add_option("--h", aip_options.h, "Template digraph: JSON file or shorthand such as K3")->required();
        aip_cmd->add_option("--level", aip_options.level, "Level k >= 1")->capture_default_str();
        aip_cmd->add_option("--witness", aip_options.witness, "Write the witness assignment here");

        FoolOptions fool_options;
        auto fool_cmd = app.add_subcommand("fool", "Certify that level k accepts K_{d+1} against K_c");
        fool_cmd->add_option("--c", fool_options.c, "Template clique size, 3 <= c <= d")->required();
        fool_cmd->add_option("--d", fool_options.d, "Instance is K_{d+1}")->required();
        fool_cmd->add_option("--level", fool_options.level, "Level k >= 2")->capture_default_str();
        fool_cmd->add_option("--report", fool_options.report, "Write the claim report here");

        PolymorphismOptions poly_options;
        auto poly_cmd = app.add_subcommand("polymorphism", "Check a Boolean operation against K2");
        poly_cmd->add_option("--check", poly_options.check, "parity, constant or first")->required();
        poly_cmd->add_option("--arity", poly_options.arity, "Odd arity L >= 3")->capture_default_str();

        CorpusOptions corpus_options;
        auto corpus_cmd = app.add_subcommand("corpus", "Write the deterministic test corpus");
        corpus_cmd->add_option("--out", corpus_options.output, "Output directory")->required();

        try {
            app.parse(argc, argv);
        }
        catch (const CLI::ParseError & e) {
            int code = app.exit(e, out, err);
            return code == 0 ? exit_code::success : exit_code::error;
        }

        if (! report_path.empty())
            global.json_report = report_path;
        std::ostream silent{nullptr};
        Streams streams{global.quiet ? silent : out, err};

        if (*realize_cmd)
            return cmd_realize(global, realize_options, streams);
        if (*crystal_cmd)
            return cmd_crystal(global, crystal_options, streams);
        if (*verify_cmd)
            return cmd_verify_crystal(global, verify_options, streams);
        if (*aip_cmd)
            return cmd_aip(global, aip_options, streams);
        if (*fool_cmd)
            return cmd_fool(global, fool_options, streams);
        if (*poly_cmd)
            return cmd_polymorphism(global, poly_options, streams);
        return cmd_corpus(global, corpus_options, streams);
    }
}
