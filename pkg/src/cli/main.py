"""
main.py
命令行入口：每个构造一个子命令，结果以确定性的 JSON 写到 stdout，
错误以 {"error": kind, "message": text} 写到 stderr。

退出码：0 成功，1 数学/定义域错误，2 用法或解析错误。
"""

import argparse
import json
import logging
import re
import sys
from typing import Any, Callable, Dict, List, Optional

import toml
import yaml

from src.config import ConfigError, init_config, setup_logging
from src.config.loader import ConfigLoader
from src.modules.descriptors import extension_from_data, parse_automorphisms, seminorm_from_data
from src.modules.exceptions import InputError, NormExtError, ParseError
from src.modules.extension import Automorphism, basis_norm, basis_norm_bound, spectral_norm
from src.modules.magnitude import (
    Magnitude, magnitude_from_json, magnitude_to_json, mag_to_float, padic_magnitude, parse_rational,
    require_prime, valexp_to_json, vp,
)
from src.modules.poly import newton_polygon, parse_polynomial, root_magnitudes, spectral_value
from src.modules.sampling import make_rng, random_samples
from src.modules.seminorm_lab import (
    Axiom, ExtensionCarrier, GaloisSupSeminorm, Seminorm, SpectralSeminorm,
    check_axioms, seminorm_from_bounded, seminorm_from_bounded_table, seminorm_from_const_estimate,
    seminorm_from_const_term, smoothing_estimate, smoothing_term,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2


class CliArgumentParser(argparse.ArgumentParser):
    """用法错误抛出 ParseError，由 run 统一转换为 JSON 错误"""

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # 以 - 开头的多项式系数与有理数（如 "-5,0,1"、-75/8）按取值处理，不当作选项
        self._negative_number_matcher = re.compile(r'^-\d[\d/,\s+\-.]*$')

    def error(self, message):
        raise ParseError(message)


# ---------------------------------------------------------------------------
# 输入
# ---------------------------------------------------------------------------

def load_data(path: str) -> Any:
    """读取 JSON/YAML/TOML 描述文件或样本文件"""
    try:
        return ConfigLoader.load_file(path)
    except (ValueError, yaml.YAMLError, toml.TomlDecodeError) as e:
        raise ParseError(f"无法读取 {path}: {e}")


def _prime(args) -> int:
    if args.p is None:
        raise ParseError("缺少 --p")
    return require_prime(args.p)


def _polynomial(args):
    if args.poly is None:
        raise ParseError("缺少 --poly")
    return parse_polynomial(args.poly)


def _extension(args):
    if args.ext is None:
        raise ParseError("缺少 --ext")
    return extension_from_data(load_data(args.ext))


def _seminorm(args) -> Seminorm:
    if args.seminorm is None:
        raise ParseError("缺少 --seminorm")
    return seminorm_from_data(load_data(args.seminorm))


def _element(args, carrier, flag: str = "element"):
    text = getattr(args, flag)
    if text is None:
        raise ParseError(f"缺少 --{flag.replace('_', '-')}")
    return carrier.parse(text)


def _samples(args, seminorm: Seminorm) -> list:
    if args.samples is None:
        prime = seminorm.prime
        return random_samples(make_rng(), seminorm.carrier, p=prime)
    data = load_data(args.samples)
    if not isinstance(data, list):
        raise ParseError(f"样本文件必须是 JSON 列表: {args.samples}")
    return [seminorm.carrier.parse(item) for item in data]


def _automorphisms(args, ext) -> List[Automorphism]:
    return parse_automorphisms(ext, args.aut or [])


# ---------------------------------------------------------------------------
# 子命令
# ---------------------------------------------------------------------------

def cmd_vp(args) -> Dict[str, Any]:
    return {"valuation": valexp_to_json(vp(parse_rational(args.x), _prime(args)))}


def cmd_norm(args) -> Dict[str, Any]:
    return {"magnitude": magnitude_to_json(padic_magnitude(parse_rational(args.x), _prime(args)))}


def cmd_spectral_value(args) -> Dict[str, Any]:
    return {"magnitude": magnitude_to_json(spectral_value(_polynomial(args), _prime(args)))}


def cmd_newton(args) -> Dict[str, Any]:
    P, p = _polynomial(args), _prime(args)
    out = newton_polygon(P, p).to_json()
    out["root_magnitudes"] = [magnitude_to_json(m) for m in root_magnitudes(P, p)]
    return out


def cmd_ext_norm(args) -> Dict[str, Any]:
    ext = _extension(args)
    x = _element(args, ExtensionCarrier(ext))
    return {"magnitude": magnitude_to_json(spectral_norm(x))}


def cmd_basis_norm(args) -> Dict[str, Any]:
    ext = _extension(args)
    x = _element(args, ExtensionCarrier(ext))
    return {
        "bound": magnitude_to_json(basis_norm_bound(ext)),
        "magnitude": magnitude_to_json(basis_norm(x)),
    }


def cmd_galois_norm(args) -> Dict[str, Any]:
    if args.seminorm is not None:
        inner = _seminorm(args)
        if not isinstance(inner.carrier, ExtensionCarrier):
            raise InputError("galois-norm 需要定义在扩张上的半范数")
        ext = inner.carrier.ext
    else:
        ext = _extension(args)
        inner = SpectralSeminorm(ext)
    auts = [Automorphism.identity(ext)] + _automorphisms(args, ext)
    x = _element(args, inner.carrier)
    return {"magnitude": magnitude_to_json(GaloisSupSeminorm(inner, auts).evaluate(x))}


def _estimate_payload(estimate) -> Dict[str, Any]:
    out = {"estimate": estimate.to_json()}
    if estimate.stabilized:
        out["limit"] = magnitude_to_json(estimate.last_term)
    return out


def cmd_smooth(args) -> Dict[str, Any]:
    f = _seminorm(args)
    x = _element(args, f.carrier)
    if args.n is not None:
        return {"term": magnitude_to_json(smoothing_term(f, x, args.n))}
    return _estimate_payload(smoothing_estimate(f, x, args.max_n, args.window))


def cmd_from_const(args) -> Dict[str, Any]:
    f = _seminorm(args)
    x = _element(args, f.carrier)
    y = _element(args, f.carrier, "y")
    if args.n is not None:
        return {"term": magnitude_to_json(seminorm_from_const_term(f, y, x, args.n))}
    return _estimate_payload(seminorm_from_const_estimate(f, y, x, args.max_n, args.window))


def cmd_from_bounded(args) -> Dict[str, Any]:
    f = _seminorm(args)
    if args.element is not None:
        return {"magnitude": magnitude_to_json(seminorm_from_bounded(f, _element(args, f.carrier)))}
    return {"table": seminorm_from_bounded_table(f).to_json()["values"]}


def cmd_check(args) -> Dict[str, Any]:
    f = _seminorm(args)
    if not args.profile:
        raise ParseError("缺少 --profile")
    profile = [name.strip().upper() for name in args.profile.split(",") if name.strip()]
    auts: List[Automorphism] = []
    if args.aut:
        if not isinstance(f.carrier, ExtensionCarrier):
            raise InputError("--aut 只适用于定义在扩张上的半范数")
        auts = _automorphisms(args, f.carrier.ext)
    report = check_axioms(f, _samples(args, f), profile, automorphisms=auts, workers=args.workers)
    return report.to_json(f.carrier)


# ---------------------------------------------------------------------------
# 输出
# ---------------------------------------------------------------------------

def _is_magnitude(obj: Any) -> bool:
    return isinstance(obj, dict) and (set(obj) == {"factors"} or obj == {"zero": True})


def add_approx(obj: Any) -> Any:
    """在每个精确 Magnitude 旁加上浮点近似 approx"""
    if _is_magnitude(obj):
        return dict(obj, approx=mag_to_float(magnitude_from_json(obj)))
    if isinstance(obj, dict):
        return {k: add_approx(v) for k, v in obj.items()}
    if isinstance(obj, list):
        return [add_approx(v) for v in obj]
    return obj


def render_text(obj: Any, prefix: str = "") -> List[str]:
    """人类可读的逐行输出"""
    if _is_magnitude(obj):
        m: Magnitude = magnitude_from_json(obj)
        return [f"{prefix}: {m} ≈ {mag_to_float(m):.6g}"]
    if isinstance(obj, dict):
        lines = []
        for k in sorted(obj):
            lines.extend(render_text(obj[k], f"{prefix}.{k}" if prefix else str(k)))
        return lines
    if isinstance(obj, list) and any(isinstance(v, (dict, list)) for v in obj):
        lines = []
        for i, v in enumerate(obj):
            lines.extend(render_text(v, f"{prefix}[{i}]"))
        return lines
    return [f"{prefix}: {obj}"]


def emit(payload: Dict[str, Any], as_json: bool, approx: bool) -> None:
    if not as_json:
        print("\n".join(render_text(payload)))
        return
    if approx:
        payload = add_approx(payload)
    print(json.dumps(payload, sort_keys=True, separators=(',', ':'), ensure_ascii=False))


def emit_error(kind: str, message: str) -> None:
    print(json.dumps({"error": kind, "message": message}, sort_keys=True,
                     separators=(',', ':'), ensure_ascii=False), file=sys.stderr)


# ---------------------------------------------------------------------------
# 解析器
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = CliArgumentParser(add_help=False)
    common.add_argument('--config', help='配置文件 (YAML/JSON/TOML)')
    common.add_argument('--log-level', help='日志级别，覆盖配置文件')
    common.add_argument('--json', dest='as_json', action='store_true', default=True, help='JSON 输出（默认）')
    common.add_argument('--no-json', dest='as_json', action='store_false', help='人类可读输出')
    common.add_argument('--approx', action='store_true', help='在精确值旁附加浮点近似')

    parser = CliArgumentParser(prog='spectranorm', description='非阿基米德范数扩张的精确计算')
    sub = parser.add_subparsers(dest='command', required=True)

    def add(name: str, handler: Callable, help_text: str, *flags: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(handler=handler)
        if 'x' in flags:
            p.add_argument('x', help='有理数，如 50 或 75/8')
        if 'p' in flags:
            p.add_argument('--p', type=int, help='素数')
        if 'poly' in flags:
            p.add_argument('--poly', help='系数，低次在前，如 "5,-7,1"')
        if 'ext' in flags:
            p.add_argument('--ext', help='扩张描述文件')
        if 'element' in flags:
            p.add_argument('--element', help='元素：有理数、剩余类或幂基坐标')
        if 'seminorm' in flags:
            p.add_argument('--seminorm', help='半范数描述文件')
        if 'limits' in flags:
            p.add_argument('--max-n', type=int, help='序列的最大 n')
            p.add_argument('--window', type=int, help='稳定窗口')
            p.add_argument('--n', type=int, help='只计算第 n 项')
        if 'aut' in flags:
            p.add_argument('--aut', action='append', help='生成元的像（可重复）')
        return p

    add('vp', cmd_vp, 'p 进赋值', 'x', 'p')
    add('norm', cmd_norm, 'p 进绝对值', 'x', 'p')
    add('spectral-value', cmd_spectral_value, '首一多项式的谱值', 'p', 'poly')
    add('newton', cmd_newton, 'Newton 多边形与根的绝对值', 'p', 'poly')
    add('ext-norm', cmd_ext_norm, '扩张元素的谱范数', 'ext', 'element')
    add('basis-norm', cmd_basis_norm, '幂基范数及乘法常数', 'ext', 'element')
    add('galois-norm', cmd_galois_norm, 'Galois 上确界范数（总含恒等）', 'ext', 'element', 'seminorm', 'aut')
    add('smooth', cmd_smooth, 'f(x^n)^(1/n) 的极限估计', 'seminorm', 'element', 'limits')
    add('from-const', cmd_from_const, 'f(x·y^n)/f(y)^n 的极限估计', 'seminorm', 'element', 'limits').add_argument(
        '--y', help='f(y) ≠ 0 的元素')
    add('from-bounded', cmd_from_bounded, '有限载体上的 sup_y f(xy)/f(y)', 'seminorm', 'element')
    check = add('check', cmd_check, '公理检查', 'seminorm', 'aut')
    check.add_argument('--profile', help='逗号分隔的公理，如 NORM,NONARCH；可选 '
                                         + ','.join(a.value for a in Axiom))
    check.add_argument('--samples', help='样本文件（JSON 列表）；缺省时使用随机样本')
    check.add_argument('--workers', type=int, help='成对检查的线程数')
    return parser


def run(argv: Optional[List[str]] = None) -> int:
    """
    执行一条命令

    Args:
        argv: 参数列表，默认取 sys.argv[1:]

    Returns:
        退出码
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except ParseError as e:
        emit_error(e.kind, str(e))
        return EXIT_USAGE
    except SystemExit as e:
        # --help
        return e.code if isinstance(e.code, int) else EXIT_OK

    try:
        manager = init_config(args.config, force=True)
        setup_logging(manager.model.logging, args.log_level)
        payload = args.handler(args)
    except ConfigError as e:
        emit_error("config", str(e))
        return EXIT_USAGE
    except InputError as e:
        emit_error(e.kind, str(e))
        return EXIT_USAGE
    except NormExtError as e:
        emit_error(e.kind, str(e))
        return EXIT_DOMAIN
    except Exception as e:
        logger.exception(f"{args.command} 执行失败")
        emit_error("internal", str(e))
        return EXIT_DOMAIN

    emit(payload, args.as_json, args.approx)
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == '__main__':
    main()
