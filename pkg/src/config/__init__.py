"""
配置模块
提供统一的配置管理接口
"""

from src.config.manager import (
    ConfigManager,
    init_config,
    reset_config,
    get_config_manager,
    get_config,
    get_dict_config,
    get_setting,
    setup_logging,
)

from src.config.models import (
    AppConfig,
    ArithmeticConfig,
    PolyConfig,
    LimitConfig,
    CheckConfig,
    LoggingConfig,
)

from src.config.exceptions import (
    ConfigError,
    ConfigFileNotFoundError,
    ConfigValidationError,
)

__version__ = "1.0.0"

__all__ = [
    # 管理器
    'ConfigManager',
    'init_config',
    'reset_config',
    'get_config_manager',
    'get_config',
    'get_dict_config',
    'get_setting',
    'setup_logging',

    # 数据模型
    'AppConfig',
    'ArithmeticConfig',
    'PolyConfig',
    'LimitConfig',
    'CheckConfig',
    'LoggingConfig',

    # 异常
    'ConfigError',
    'ConfigFileNotFoundError',
    'ConfigValidationError',
]
