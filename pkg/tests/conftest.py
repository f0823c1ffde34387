from hypothesis import HealthCheck, settings

settings.register_profile(
    "repo",
    deadline=None,
    max_examples=40,
    suppress_health_check=[HealthCheck.too_slow],
    derandomize=True,
)
settings.load_profile("repo")


def pytest_terminal_summary(terminalreporter):
    """Echo the acceptance table if the acceptance tests ran in this session."""
    from oproot import acceptance

    info = acceptance.run_criterion.cache_info()
    if info.currsize == 0:
        return
    terminalreporter.section("acceptance criteria")
    for cid in acceptance.CRITERIA:
        try:
            rep = acceptance.run_criterion(cid)
        except Exception as exc:  # a crashed criterion is reported by its test
            terminalreporter.write_line(f"{cid} ERROR  {exc}")
            continue
        terminalreporter.write_line(acceptance.format_line(rep))
