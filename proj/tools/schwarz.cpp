#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include <schwarz/commands.hpp>

namespace {

constexpr int exit_fail = 1;
constexpr int exit_usage = 2;

void print(const schwarz::CommandResult& r)
{
    std::cout << schwarz::json(r).dump(2) << '\n';
}

int report_error(const std::string& kind, const std::exception& e, std::optional<std::size_t> position = {})
{
    schwarz::json err = {{"error", kind}, {"message", e.what()}};
    if (position) {
        err["position"] = *position;
    }
    std::cerr << err.dump() << '\n';
    return exit_usage;
}

constexpr const char* phi_grammar = R"txt(Phi grammar: integers, y, + - * /, parentheses, ^ with an integer exponent.
Example: --phi "(2*y+1)/(y^2-3)")txt";

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Schwarz triangle equations: integrability, triangle groups, numerical checks"};
    app.require_subcommand(1);

    std::string inv_angles_eq;
    auto* eq = app.add_subcommand("classify-equation", "Strong minimality verdict for an inverse-angle triple");
    eq->add_option("--inv-angles", inv_angles_eq, "a,b,c as fractions (or sqrt(p/q)), or 'generic'")->required();

    std::string sig;
    auto* grp = app.add_subcommand("classify-group", "Arithmeticity, maximality and special polynomials of a triangle group");
    grp->add_option("--sig", sig, "k,l,m with entries >= 2 or 'inf'")->required();

    schwarz::VerifyRequest req;
    auto* ver = app.add_subcommand("verify", "Residual check of series solutions; exit 1 if above --tol");
    ver->footer(phi_grammar);
    ver->add_option("kind", req.kind, "principal | riccati | star | pullback")
        ->required()
        ->check(CLI::IsMember({"principal", "riccati", "star", "pullback"}));
    ver->add_option("--inv-angles", req.inv_angles, "inverse angles a,b,c");
    ver->add_option("--rfunc", req.rfunc, "R as [n0,n1,...]/[d0,d1,...]");
    ver->add_option("--phi", req.phi, "pullback map Phi(y)");
    ver->add_option("--order", req.order, "truncation order")->capture_default_str()->check(CLI::Range(5, 400));
    ver->add_option("--tol", req.tol, "pass threshold on the maximal residual")->capture_default_str();
    ver->add_option("--base", req.base, "real rational base point")->capture_default_str();
    ver->add_option("--radius", req.radius, "sample disk radius (default: a quarter of the distance to the nearest pole)");

    long max_den = 0;
    std::optional<std::string> out_path;
    auto* sw = app.add_subcommand("sweep", "Compare the exact classifier with the monodromy oracle on all small triples");
    sw->add_option("--max-den", max_den, "denominator bound (>= 2)")->required();
    sw->add_option("--out", out_path, "write newline-delimited records here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*eq) {
            print(schwarz::cmd_classify_equation(inv_angles_eq));
        } else if (*grp) {
            print(schwarz::cmd_classify_group(sig));
        } else if (*ver) {
            const auto result = schwarz::cmd_verify(req);
            print(result);
            return result.result.at("pass").get<bool>() ? 0 : exit_fail;
        } else if (*sw) {
            if (out_path) {
                std::ofstream file(*out_path);
                if (!file) {
                    throw schwarz::Error("cannot open output path '" + *out_path + "'");
                }
                print(schwarz::cmd_sweep(max_den, file, out_path));
            } else {
                print(schwarz::cmd_sweep(max_den, std::cout));
            }
        }
    } catch (const schwarz::ParseError& e) {
        return report_error("parse_error", e, e.position());
    } catch (const schwarz::UnsupportedParams& e) {
        return report_error("unsupported_params", e);
    } catch (const schwarz::DomainError& e) {
        return report_error("domain_error", e);
    } catch (const schwarz::Error& e) {
        return report_error("error", e);
    }
    return 0;
}
