"""Custom exceptions for the application."""


class ICausalError(Exception):
    """应用程序基础异常"""
    pass


class ConfigError(ICausalError):
    """配置或场景描述异常"""
    pass


class DimensionError(ICausalError):
    """子系统维度、目标索引或划分不合法"""
    pass


class NormalizationError(ICausalError):
    """态未归一化、矩阵非幺正或基非正交"""
    pass


class ChannelError(ICausalError):
    """Kraus 信道不满足迹不增条件"""
    pass


class HorizonError(ICausalError):
    """半径落在 Schwarzschild 半径以内，或时空配置非法"""
    pass


class DivergentThresholdError(ICausalError):
    """平直时空下 τ* 阈值发散"""
    pass


class PreconditionError(ICausalError):
    """前置条件不满足"""
    pass


class StrategyIncompleteError(ICausalError):
    """信号策略无法解析某个消息历史"""
    pass


class BranchCountError(ICausalError):
    """质量寄存器分支数与因果序数量不一致"""
    pass


class CorpusError(ICausalError):
    """NLWE 态集不正交或不是乘积态"""
    pass


class ReportError(ICausalError):
    """报告或表格导出失败"""
    pass
