"""
manager.py
配置管理器主类
"""

import logging
import logging.handlers
from pathlib import Path
from typing import Dict, Any, Optional, Union

from munch import Munch

from src.config.exceptions import ConfigError, ConfigFileNotFoundError, ConfigValidationError
from src.config.models import AppConfig, LoggingConfig
from src.config.loader import ConfigLoader
from src.config.validator import ConfigValidator

logger = logging.getLogger(__name__)

class ConfigManager:
    """
    配置管理器
    负责加载、验证和管理配置。未给出配置文件时使用 AppConfig 的默认值。
    """

    def __init__(self, config_path: Optional[Union[str, Path]] = None):
        """
        初始化配置管理器

        Args:
            config_path: 配置文件路径（YAML/JSON/TOML），为None则使用默认配置
        """
        self.config_path = Path(config_path) if config_path is not None else None

        self.loader = ConfigLoader()
        self.validator = ConfigValidator()

        self._config: Optional[AppConfig] = None
        self._dict_config: Dict[str, Any] = {}

        self._load_config()

        logger.info(f"配置管理器初始化完成，环境: {self._config.environment}")

    def _load_config(self) -> None:
        """加载配置"""
        # 1. 读取文件（无文件时使用默认值）
        if self.config_path is None:
            file_dict: Dict[str, Any] = {}
        elif not self.config_path.exists():
            raise ConfigFileNotFoundError(f"配置文件不存在: {self.config_path}")
        else:
            file_dict = self.loader.load_file(self.config_path)
            if not isinstance(file_dict, dict):
                raise ConfigValidationError(f"配置文件顶层应为字典: {self.config_path}")

        # 2. 与默认值深度合并
        defaults = AppConfig().model_dump()
        merged = self.loader.merge_configs(defaults, file_dict)

        # 3. 验证配置数据
        is_valid, errors = self.validator.validate_schema(merged)
        if not is_valid:
            error_msg = "配置数据验证失败:\n" + "\n".join(f"  - {error}" for error in errors)
            logger.error(error_msg)
            raise ConfigValidationError(error_msg)

        # 4. 转换为Pydantic模型
        try:
            self._config = AppConfig(**merged)
        except Exception as e:
            logger.error(f"配置数据转换失败: {e}")
            raise ConfigValidationError(f"配置数据格式错误: {e}")

        self._dict_config = self._config.model_dump()

    @property
    def model(self) -> AppConfig:
        """获取Pydantic配置模型"""
        return self._config

    @property
    def config(self) -> Munch:
        """获取配置访问器（支持点号访问）"""
        return Munch.fromDict(self._dict_config)

    @property
    def dict_config(self) -> Dict[str, Any]:
        """获取字典形式的配置"""
        return self._dict_config.copy()

    def get(self, key: str, default: Any = None) -> Any:
        """
        获取配置值

        Args:
            key: 配置键，支持点号分隔
            default: 默认值

        Returns:
            配置值
        """
        value: Any = self._dict_config

        for k in key.split('.'):
            if isinstance(value, dict) and k in value:
                value = value[k]
            else:
                return default

        return value

    def set(self, key: str, value: Any) -> bool:
        """
        设置配置值（设置后整体重新校验）

        Args:
            key: 配置键，支持点号分隔
            value: 配置值

        Returns:
            是否成功
        """
        keys = key.split('.')
        updates: Dict[str, Any] = {keys[-1]: value}
        for k in reversed(keys[:-1]):
            updates = {k: updates}
        return self.update(updates)

    def update(self, updates: Dict[str, Any]) -> bool:
        """
        批量更新配置

        Args:
            updates: 更新字典

        Returns:
            是否成功
        """
        merged_dict = ConfigLoader.merge_configs(self._dict_config, updates)
        is_valid, errors = self.validator.validate_schema(merged_dict)
        if not is_valid:
            logger.error(f"批量更新配置失败: {errors}")
            return False
        try:
            self._config = AppConfig(**merged_dict)
        except Exception as e:
            logger.error(f"批量更新配置失败: {e}")
            return False

        self._dict_config = self._config.model_dump()
        logger.debug(f"配置已更新: {list(updates)}")
        return True

    def reload(self) -> bool:
        """
        重新加载配置

        Returns:
            是否成功
        """
        try:
            self._load_config()
            logger.info("配置已重新加载")
            return True
        except ConfigError as e:
            logger.error(f"重新加载配置失败: {e}")
            return False

    def validate(self) -> Dict[str, Any]:
        """
        验证当前配置

        Returns:
            验证结果字典
        """
        data_valid, data_errors = self.validator.validate_schema(self._dict_config)

        model_errors = []
        try:
            AppConfig(**self._dict_config)
        except Exception as e:
            model_errors.append(str(e))

        return {
            'is_valid': data_valid and len(model_errors) == 0,
            'data_errors': data_errors,
            'model_errors': model_errors,
        }

    def __str__(self) -> str:
        """字符串表示"""
        return f"ConfigManager(config_path={self.config_path}, environment={self._config.environment})"


def setup_logging(log_config: LoggingConfig, level_override: Optional[str] = None) -> None:
    """
    根据配置设置根日志器。日志统一输出到 stderr，stdout 留给 JSON 结果。

    Args:
        log_config: 日志配置
        level_override: 命令行指定的日志级别
    """
    level = (level_override or log_config.log_level).upper()
    if not ConfigValidator.validate_log_level(level):
        raise ConfigValidationError(f"日志级别无效: {level}")

    handlers: list = [logging.StreamHandler()]
    if log_config.log_file:
        Path(log_config.log_file).parent.mkdir(parents=True, exist_ok=True)
        handlers.append(logging.handlers.RotatingFileHandler(
            log_config.log_file,
            maxBytes=log_config.max_log_size,
            backupCount=log_config.backup_count,
            encoding='utf-8',
        ))

    logging.basicConfig(level=level, format=log_config.log_format, handlers=handlers, force=True)


# 全局配置管理器实例
_global_config_manager: Optional[ConfigManager] = None

def init_config(config_file: Optional[Union[str, Path]] = None, force: bool = False) -> ConfigManager:
    """
    初始化全局配置管理器

    Args:
        config_file: 配置文件路径，为None则使用默认配置
        force: 已初始化时是否重新创建

    Returns:
        ConfigManager实例
    """
    global _global_config_manager

    if _global_config_manager is None or force:
        _global_config_manager = ConfigManager(config_path=config_file)

    return _global_config_manager

def reset_config() -> None:
    """丢弃全局配置管理器（主要供测试使用）"""
    global _global_config_manager
    _global_config_manager = None

def get_config_manager() -> ConfigManager:
    """
    获取全局配置管理器实例

    Returns:
        ConfigManager实例
    """
    if _global_config_manager is None:
        raise ConfigError("配置管理器未初始化，请先调用 init_config()")

    return _global_config_manager

def get_config() -> Munch:
    """获取配置访问器"""
    return get_config_manager().config

def get_dict_config() -> Dict[str, Any]:
    """获取字典形式的配置"""
    return get_config_manager().dict_config

def get_setting(key: str, default: Any) -> Any:
    """
    读取单个配置项；全局配置未初始化时返回默认值。
    库代码通过它读取参数，因此不依赖配置文件即可使用。
    """
    if _global_config_manager is None:
        return default
    return _global_config_manager.get(key, default)
