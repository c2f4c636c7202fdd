"""Application constants."""

# 数值容差
TOLERANCE = 1e-10  # 断言容差
IDENTITY_TOLERANCE = 1e-12  # 精确可表示构造的恒等式
NULL_PROBABILITY = 1e-12  # 低于此概率的测量结果标记为空态
EIGEN_CUTOFF = 1e-12  # 熵计算中忽略的本征值

# 时空
BOUNDARY_BAND = 1e-9  # 秒
MASS_FLOOR = 1e-30  # kg，低于此质量视为平直时空

# 稠密表示上限
MAX_AMPLITUDES = 2 ** 14

# 报告
SCHEMA_VERSION = "1.0.0"
REPORT_DIGITS = 15

# 环境变量（仅用于测试）
TOLERANCE_ENV = "ICAUSAL_TOL"

# 退出码
EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
