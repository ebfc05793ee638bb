#!/usr/bin/env python3
"""
Inseparability CLI
Command-line interface for KR coefficients, ψ polynomials, indices of
inseparability, g_h(r) tables, trace ideals and the verification suites.
"""

import argparse
import json
import logging
import sys
from typing import List, Optional, Tuple

from src.config import OUTPUT_FORMATS, RunConfig
from src.exceptions import DimensionMismatchError, InsepError, PolynomialParseError, UnknownSuiteError
from src.inseparability import (g_exact, gamma_lower_bound, higher_different, profile, residue_field_sufficient,
                                trace_ideal)
from src.kr_coefficients import d_coefficient, format_terms
from src.local_fields import INF, Indeterminate, elementary_symmetric_values, from_series
from src.parsing import parse_base, parse_element_terms, parse_extension
from src.partitions import Partition, enumerate_partitions
from src.symmetric_functions import brute_force_psi
from src.verification import SUITE_ORDER, cmd_example, run_suite

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def parse_r_range(text: str) -> Tuple[int, int]:
    """"R0..R1" or a single integer R."""
    start, sep, end = text.partition("..")
    try:
        if not sep:
            return int(text), int(text)
        r0, r1 = int(start), int(end)
    except ValueError:
        raise argparse.ArgumentTypeError(f"r range must look like 1..8, got {text!r}")
    if r0 > r1:
        raise argparse.ArgumentTypeError(f"empty r range {text!r}")
    return r0, r1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--base", "--field", dest="base", type=str, default=None,
                        help="기저 체 (예: laurent:p=2,d=1, padic:p=3)")
    common.add_argument("--precision", type=int, default=None,
                        help="절대 정밀도 (기본: INSEP_PRECISION 또는 64)")
    common.add_argument("--format", dest="output_format", choices=OUTPUT_FORMATS, default=None,
                        help="출력 형식 (기본: table)")
    common.add_argument("--seed", type=int, default=None, help="난수 시드 (기본: 0)")
    common.add_argument("--sweep-bound", type=int, default=None, help="전수 탐색 자릿수 B (기본: n)")
    common.add_argument("--sweep-limit", type=int, default=None, help="전수 탐색 최대 원소 수")
    common.add_argument("--sigma-bound", type=int, default=None, help="선형대수 오라클의 최대 Σ(μ)")
    common.add_argument("--samples", type=int, default=None, help="셀당 무작위 원소 수")
    common.add_argument("--progress", action="store_true", help="전수 탐색 진행률 표시")
    common.add_argument("--verbose", "-v", action="store_true", help="상세 로그 출력")

    parser = argparse.ArgumentParser(
        description="국소체 확대의 대칭다항식 부치 불변량 계산기",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
예제:
  # KR 계수
  python main.py dcoef --lambda "{6}" --mu "{1,1,1,3}" --trace

  # ψ 다항식과 KR 교차 검증
  python main.py psi --mu "{1,1,2,2}" --n 6 --check-kr

  # 비분리 지표
  python main.py indices --field laurent:p=2,d=1 --poly "X^8 + t*X^3 + t*X^2 + t"

  # g_h(r) 표
  python main.py gtable --poly "X^8 + t*X^3 + t*X^2 + t" --h 4 --r 1..8 --mode exhaustive

  # 원소의 E_h 값
  python main.py eh --poly "X^8 + t*X^3 + t*X^2 + t" --alpha "1@1 + 1@2" --precision 4

  # 예제 재현 및 검증
  python main.py example
  python main.py verify all --seed 7 --format json
        """
    )

    subparsers = parser.add_subparsers(dest="command", help="명령어")

    dcoef_parser = subparsers.add_parser("dcoef", parents=[common], help="KR 계수 d_λμ 계산")
    dcoef_parser.add_argument("--lambda", dest="lam", type=str, required=True, help="분할 λ (예: {6})")
    dcoef_parser.add_argument("--mu", type=str, required=True, help="분할 μ (예: {1,1,1,3})")
    dcoef_parser.add_argument("--trace", action="store_true", help="사이클 유향그래프별 기여 (Γ, sgn, η) 출력")

    psi_parser = subparsers.add_parser("psi", parents=[common], help="ψ_μ 다항식 계산")
    psi_parser.add_argument("--mu", type=str, required=True, help="분할 μ")
    psi_parser.add_argument("--n", type=int, required=True, help="변수 개수")
    psi_parser.add_argument("--check-kr", action="store_true", help="KR 계수와 교차 검증")

    indices_parser = subparsers.add_parser("indices", parents=[common], help="비분리 지표 i_j 계산")
    indices_parser.add_argument("--poly", type=str, required=True, help="아이젠슈타인 다항식")

    gtable_parser = subparsers.add_parser("gtable", parents=[common], help="g_h(r) 표 계산")
    gtable_parser.add_argument("--poly", type=str, required=True, help="아이젠슈타인 다항식")
    gtable_parser.add_argument("--h", type=int, required=True, help="기본 대칭다항식 차수 h")
    gtable_parser.add_argument("--r", type=parse_r_range, default=None, help="r 범위 (예: 1..8, 기본: 1..n)")
    gtable_parser.add_argument("--mode", choices=("witness", "exhaustive"), default="witness",
                               help="증인 탐색 또는 전수 탐색 (기본: witness)")

    trace_parser = subparsers.add_parser("trace", parents=[common], help="대각합 이데알 Tr(M_L^r) 계산")
    trace_parser.add_argument("--poly", type=str, required=True, help="아이젠슈타인 다항식")
    trace_parser.add_argument("--r", type=int, required=True, help="지수 r")

    eh_parser = subparsers.add_parser("eh", parents=[common], help="원소 α의 E_h(α)와 부치 계산")
    eh_parser.add_argument("--poly", type=str, required=True, help="아이젠슈타인 다항식")
    eh_parser.add_argument("--alpha", type=str, required=True, help="원소 α = Σ a_i π^i (예: \"1@1 + (g+1)@2\")")
    eh_parser.add_argument("--h", type=int, default=None, help="이 차수의 부치가 결정되지 않으면 실패 (기본: 전체 출력)")

    example_parser = subparsers.add_parser("example", parents=[common], help="차수 8 예제 재현")
    example_parser.add_argument("--poly", type=str, default=None, help="다른 정의 다항식으로 실행")

    verify_parser = subparsers.add_parser("verify", parents=[common], help="검증 스위트 실행")
    verify_parser.add_argument("suite", choices=SUITE_ORDER + ("all",), help="스위트 이름")

    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig.from_env(
        base=args.base,
        precision=args.precision,
        output_format=args.output_format,
        seed=args.seed,
        sweep_bound=args.sweep_bound,
        sweep_limit=args.sweep_limit,
        sigma_bound=args.sigma_bound,
        samples=args.samples,
        progress=args.progress or None,
    )


def emit(config: RunConfig, data: object, table_lines: List[str]):
    if config.output_format == "json":
        print(json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False))
    else:
        print("\n".join(table_lines))


def run_dcoef(args: argparse.Namespace, config: RunConfig) -> int:
    lam, mu = Partition.parse(args.lam), Partition.parse(args.mu)
    value = d_coefficient(lam, mu)
    data = {"schema": 1, "lambda": str(lam), "mu": str(mu), "d": value}
    lines = [str(value)]
    if args.trace:
        terms = format_terms(lam, mu)
        data["terms"] = terms
        lines = [f"Γ={term['digraph']}  sgn={term['sign']:+d}  η={term['eta']}" for term in terms] + [
            "=" * 50, f"d_{lam}{mu} = {value}"]
    emit(config, data, lines)
    return EXIT_OK


def run_psi(args: argparse.Namespace, config: RunConfig) -> int:
    mu = Partition.parse(args.mu)
    psi = brute_force_psi(mu, args.n, config.sigma_bound)
    data = {"schema": 1, "mu": str(mu), "n": args.n,
            "terms": {str(lam): d for lam, d in sorted(psi.terms.items(), reverse=True)}}
    lines = psi.lines() or ["0"]
    status = EXIT_OK
    if args.check_kr:
        mismatches = [
            {"lambda": str(lam), "psi": psi.coefficient(lam), "kr": d_coefficient(lam, mu)}
            for lam in enumerate_partitions(mu.weight, max_part=args.n)
            if psi.coefficient(lam) != d_coefficient(lam, mu)
        ]
        data["kr_mismatches"] = mismatches
        if mismatches:
            lines.append(f"❌ KR 불일치 {len(mismatches)}개: {mismatches[:5]}")
            status = EXIT_FAILED
        else:
            lines.append("✅ KR 계수와 일치")
    emit(config, data, lines)
    return status


def run_indices(args: argparse.Namespace, config: RunConfig) -> int:
    ext = parse_extension(parse_base(config.base, config.precision), args.poly)
    prof = profile(ext)
    data = {"schema": 1, "field": ext.base.spec(), "poly": ext.format(), **prof.to_dict(),
            "residue_field_sufficient": residue_field_sufficient(prof, ext.base.q)}
    info = prof.to_dict()
    lines = [
        f"📋 {ext.format()} over {ext.base.name}",
        "=" * 50,
        f"  n = {prof.n}, p = {prof.p}, ν = {prof.nu}, e_L = {info['e_L']}",
        f"  i_j^π = {info['i_pi']}",
        f"  i_j   = {info['i']}",
        f"  a_j   = {info['a']}",
        f"  b_j   = {info['b']}",
        f"  d_j   = {info['d_j']}",
    ]
    emit(config, data, lines)
    return EXIT_OK


def run_gtable(args: argparse.Namespace, config: RunConfig) -> int:
    ext = parse_extension(parse_base(config.base, config.precision), args.poly)
    prof = profile(ext)
    r0, r1 = args.r or (1, ext.n)
    rows = [
        g_exact(ext, prof, args.h, r, args.mode, config.sweep_bound, config.sweep_limit, config.progress).to_dict()
        for r in range(r0, r1 + 1)
    ]
    lines = [f"{'r':>4} {'γ':>4} {'g':>4}  status       witness", "=" * 50]
    for row in rows:
        witness = row["witness"] or ""
        lines.append(f"{row['r']:>4} {row['gamma']:>4} {row['g']:>4}  {row['status']:<12} {witness}")
    emit(config, {"schema": 1, "h": args.h, "mode": args.mode, "rows": rows}, lines)
    return EXIT_OK


def run_trace(args: argparse.Namespace, config: RunConfig) -> int:
    ext = parse_extension(parse_base(config.base, config.precision), args.poly)
    prof = profile(ext)
    value = trace_ideal(ext, args.r, prof)
    d_0 = higher_different(prof, 0)
    emit(config, {"schema": 1, "r": args.r, "d_0": d_0, "trace": value},
         [f"Tr(M_L^{args.r}) = M_K^{value}  (d_0 = {d_0})"])
    return EXIT_OK


def _valuation_text(v) -> object:
    if isinstance(v, Indeterminate):
        return str(v)
    return "inf" if v == INF else int(v)


def run_eh(args: argparse.Namespace, config: RunConfig) -> int:
    base = parse_base(config.base, config.precision)
    ext = parse_extension(base, args.poly)
    alpha = from_series(ext, parse_element_terms(base, args.alpha))
    required = [] if args.h is None else [args.h]
    values = elementary_symmetric_values(ext, alpha, config.precision, require=required)
    prof = profile(ext)
    v_L = alpha.v_L()
    rows = []
    for h in required or range(1, ext.n + 1):
        row = {"h": h, "value": str(values[h - 1]), "v_K": _valuation_text(values[h - 1].valuation())}
        if isinstance(v_L, int):
            row["gamma"] = gamma_lower_bound(prof, h, v_L)
        rows.append(row)
    lines = [f"📋 α = {alpha}, v_L(α) = {_valuation_text(v_L)}", "=" * 50]
    for row in rows:
        gamma = f"  γ = {row['gamma']}" if "gamma" in row else ""
        lines.append(f"  E_{row['h']}(α) = {row['value']}  (v_K = {row['v_K']}){gamma}")
    emit(config, {"schema": 1, "alpha": str(alpha), "v_L": _valuation_text(v_L), "rows": rows}, lines)
    return EXIT_OK


def run_report(report, config: RunConfig) -> int:
    print(report.to_json() if config.output_format == "json" else report.to_table())
    return EXIT_OK if report.passed else EXIT_FAILED


COMMANDS = {
    "dcoef": run_dcoef,
    "psi": run_psi,
    "indices": run_indices,
    "gtable": run_gtable,
    "trace": run_trace,
    "eh": run_eh,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    if not args.command:
        parser.print_help()
        return EXIT_USAGE

    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)

    try:
        config = config_from_args(args)
        if args.command == "example":
            return run_report(cmd_example(config, args.poly), config)
        if args.command == "verify":
            return run_report(run_suite(args.suite, config), config)
        return COMMANDS[args.command](args, config)
    except (PolynomialParseError, UnknownSuiteError, DimensionMismatchError) as e:
        print(f"❌ 입력 오류: {e}", file=sys.stderr)
        return EXIT_USAGE
    except InsepError as e:
        print(f"❌ 계산 실패: {e}", file=sys.stderr)
        return EXIT_FAILED
    except ValueError as e:
        print(f"❌ 설정 오류: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
