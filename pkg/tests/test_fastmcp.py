import pytest
from fastmcp import Client

from rdft_kit.create_server import server_init
from rdft_kit.tools import __all__


@pytest.fixture
def fastmcp_server(temp_dir):
    """Fixture to start the FastMCP server."""
    return server_init(root_dir=temp_dir)


@pytest.mark.asyncio
async def test_tool_functionality(fastmcp_server):
    async with Client(fastmcp_server) as client:
        result = await client.list_tools()
        list_tools = [tool.name for tool in result]
        assert len(result) == len(__all__)
        assert "freq_response" in list_tools
        assert "list_methods" in list_tools

        res = await client.call_tool("list_methods", {})
        text = res.content[0].text
        assert "bandpass" in text


@pytest.mark.asyncio
async def test_design_window_tool(fastmcp_server):
    async with Client(fastmcp_server) as client:
        res = await client.call_tool("design_window", {"kind": "hann", "k_max": 4})
        text = res.content[0].text
        assert "design-window_hann.csv" in text
        assert "alpha" in text


@pytest.mark.asyncio
async def test_error_reported_as_text(fastmcp_server):
    async with Client(fastmcp_server) as client:
        res = await client.call_tool("design_window", {"kind": "kaiser"})
        assert res.content[0].text.startswith("Error:")
        assert "kind must be one of" in res.content[0].text
