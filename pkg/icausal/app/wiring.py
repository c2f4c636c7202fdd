"""Dependency injection and object wiring."""

from typing import Optional

from ..config.loader import ConfigLoader
from ..core.types import ConfigDict
from ..domains.report import BranchTableExporter
from .workflows.acceptance_workflow import AcceptanceWorkflow
from .workflows.scenario_workflow import ScenarioWorkflow


class Container:
    """依赖注入容器"""

    def __init__(self, config_path: Optional[str] = None):
        # 基础服务
        self.config_loader = ConfigLoader(config_path)
        self.exporter = BranchTableExporter()

        # 业务工作流
        self.scenario_workflow = ScenarioWorkflow(self.exporter)
        self.acceptance_workflow = AcceptanceWorkflow()

    def load_config(self) -> ConfigDict:
        return self.config_loader.load()

    def get_scenario_workflow(self) -> ScenarioWorkflow:
        return self.scenario_workflow

    def get_acceptance_workflow(self) -> AcceptanceWorkflow:
        return self.acceptance_workflow
