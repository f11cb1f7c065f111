import pytest
from pydantic import ValidationError

from config.settings import Settings, get_settings


class TestSettings:
    """NETCONV_* environment overrides."""

    @pytest.mark.smoke
    def test_defaults(self, monkeypatch) -> None:
        for name in ("NETCONV_DEFAULT_Z0", "NETCONV_SELFTEST_TRIALS", "NETCONV_DEFAULT_CONVENTION"):
            monkeypatch.delenv(name, raising=False)
        settings = Settings(_env_file=None)
        assert settings.default_z0 == 50.0
        assert settings.default_convention == "kurokawa"
        assert settings.singular_rcond == 1e-13
        assert settings.oracle_tolerance == 1e-9
        assert settings.selftest_trials == 100

    def test_environment_override(self, monkeypatch) -> None:
        monkeypatch.setenv("NETCONV_DEFAULT_Z0", "75")
        monkeypatch.setenv("netconv_selftest_trials", "12")
        monkeypatch.setenv("NETCONV_DEFAULT_CONVENTION", "traveling")
        settings = Settings(_env_file=None)
        assert settings.default_z0 == 75.0
        assert settings.selftest_trials == 12
        assert settings.default_convention == "traveling"

    @pytest.mark.parametrize(
        "name,value",
        [
            ("NETCONV_DEFAULT_Z0", "-50"),
            ("NETCONV_SINGULAR_RCOND", "0"),
            ("NETCONV_DEFAULT_CONVENTION", "power"),
            ("NETCONV_TOUCHSTONE_FORMAT", "XY"),
        ],
    )
    def test_invalid_values(self, monkeypatch, name, value) -> None:
        monkeypatch.setenv(name, value)
        with pytest.raises(ValidationError):
            Settings(_env_file=None)

    def test_cached(self) -> None:
        assert get_settings() is get_settings()
