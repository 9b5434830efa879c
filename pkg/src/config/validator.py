"""
validator.py
配置验证器
"""

from typing import Dict, Any, List, Tuple
import logging

logger = logging.getLogger(__name__)

class ConfigValidator:
    """配置验证器"""

    @staticmethod
    def validate_log_level(level: str) -> bool:
        """验证日志级别"""
        valid_levels = ['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL']
        return level.upper() in valid_levels

    @staticmethod
    def validate_envelope(max_degree: int, max_prime: int) -> bool:
        """验证 mod p 不可约判定的穷举范围"""
        return 1 <= max_degree <= 64 and max_prime >= 2

    @staticmethod
    def validate_schema(config_dict: Dict[str, Any]) -> Tuple[bool, List[str]]:
        """
        验证配置数据模式

        Args:
            config_dict: 配置字典

        Returns:
            (是否有效, 错误列表)
        """
        errors = []

        # 验证日志级别
        log_level = config_dict.get('logging', {}).get('log_level')
        if log_level and not ConfigValidator.validate_log_level(log_level):
            errors.append(f"日志级别无效: {log_level}")

        # 验证穷举范围
        poly_config = config_dict.get('poly', {})
        max_degree = poly_config.get('irreducibility_max_degree', 8)
        max_prime = poly_config.get('irreducibility_max_prime', 997)
        if not ConfigValidator.validate_envelope(max_degree, max_prime):
            errors.append(f"不可约判定范围无效: degree<={max_degree}, p<={max_prime}")

        # 验证幂乘性检查所用的指数
        for n in config_dict.get('check', {}).get('pow_exponents', []):
            if not isinstance(n, int) or n < 2:
                errors.append(f"幂指数无效: {n}，应为 >= 2 的整数")

        return len(errors) == 0, errors
